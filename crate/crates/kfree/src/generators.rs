//! Generators for every named graph family: Andrásfai, Mycielski, Kneser,
//! Turán, Hajnal, Häggkvist, and the extended join constructions built from
//! them. All constructions are deterministic: the same [`FamilySpec`] always
//! produces the identical labeled graph.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_integer::binomial;

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_ORDER};
use crate::rat::{parse_rat, Rat};

/// Andrásfai graph `A_k`: `A_1 = K_2`; for `k >= 2` the complement of the
/// `(k-1)`-th power of the cycle on `3k-1` vertices. It is `k`-regular of
/// order `3k-1` and triangle-free.
pub fn andrasfai(k: usize) -> Result<Graph> {
    if k == 0 {
        return Err(Error::InvalidParameter("andrasfai needs k >= 1".into()));
    }
    if k == 1 {
        return Ok(Graph::complete(2));
    }
    Ok(Graph::cycle_power(3 * k - 1, k - 1)?.complement())
}

/// Mycielski graph `M_i`: `M_1 = K_2`; `M_{i+1}` adds one shadow per vertex
/// plus an apex. Triangle-free with chromatic number `i+1`.
///
/// Labels: originals `0..n-1`, shadow of `j` is `n+j`, apex is `2n`.
pub fn mycielski(i: usize) -> Result<Graph> {
    if i == 0 {
        return Err(Error::InvalidParameter("mycielski needs i >= 1".into()));
    }
    let mut g = Graph::complete(2);
    for _ in 1..i {
        let n = g.order();
        let mut next = Graph::empty(2 * n + 1);
        for (u, v) in g.edges() {
            next.add_edge(u, v);
            // shadow u_j is joined precisely to the neighbors of v_j
            next.add_edge(n + u, v);
            next.add_edge(n + v, u);
        }
        for j in 0..n {
            next.add_edge(2 * n, n + j); // apex to all shadows
        }
        g = next;
    }
    Ok(g)
}

/// Bijection between Kneser vertex labels and `m`-subsets of the ground set
/// `{0, ..., 2m+h-1}`, in colexicographic order.
pub struct KneserIndex {
    ground: usize,
    subsets: Vec<u64>,
}

impl KneserIndex {
    pub fn new(m: usize, h: usize) -> Result<KneserIndex> {
        if m == 0 {
            return Err(Error::InvalidParameter("kneser needs m >= 1".into()));
        }
        let ground = 2 * m + h;
        if ground > 63 {
            return Err(Error::InvalidParameter(format!(
                "kneser ground set {ground} too large"
            )));
        }
        let count = binomial(ground as u128, m as u128);
        if count > MAX_ORDER as u128 {
            return Err(Error::TooLarge(count as usize));
        }
        // Colex order on m-subsets coincides with numeric order of their
        // bitmasks; Gosper's hack walks equal-popcount masks ascending.
        let mut subsets = Vec::with_capacity(count as usize);
        let mut mask: u64 = (1 << m) - 1;
        let limit: u64 = 1 << ground;
        while mask < limit {
            subsets.push(mask);
            let c = mask & mask.wrapping_neg();
            let r = mask + c;
            mask = (((r ^ mask) >> 2) / c) | r;
        }
        debug_assert_eq!(subsets.len(), count as usize);
        Ok(KneserIndex { ground, subsets })
    }

    pub fn ground_size(&self) -> usize {
        self.ground
    }

    pub fn len(&self) -> usize {
        self.subsets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subsets.is_empty()
    }

    /// Subset mask of a vertex label.
    pub fn subset_of(&self, label: usize) -> u64 {
        self.subsets[label]
    }

    /// Label of a subset mask, if it belongs to the index.
    pub fn label_of(&self, subset: u64) -> Option<usize> {
        self.subsets.binary_search(&subset).ok()
    }

    pub fn subsets(&self) -> &[u64] {
        &self.subsets
    }
}

/// Kneser graph on the `m`-subsets of a `(2m+h)`-set, adjacent when
/// disjoint. Regular of degree `C(m+h, m)`; triangle-free iff `m > h`.
pub fn kneser(m: usize, h: usize) -> Result<Graph> {
    let index = KneserIndex::new(m, h)?;
    let t = index.len();
    let mut g = Graph::empty(t);
    for a in 0..t {
        for b in (a + 1)..t {
            if index.subset_of(a) & index.subset_of(b) == 0 {
                g.add_edge(a, b);
            }
        }
    }
    Ok(g)
}

/// Block sizes of the Hajnal graph `H(n, m, h)`: (Kneser block, A, B).
pub fn hajnal_blocks(n: usize, m: usize, h: usize) -> Result<(usize, usize, usize)> {
    if m == 0 {
        return Err(Error::InvalidParameter("hajnal needs m >= 1".into()));
    }
    let t = binomial((2 * m + h) as u128, m as u128);
    let min_n = (3 * m + h) as u128 + t;
    if (n as u128) < min_n {
        return Err(Error::InvalidParameter(format!(
            "hajnal needs n >= 3m+h+C(2m+h,m) = {min_n}, got n = {n}"
        )));
    }
    let t = t as usize;
    let n1 = n - t;
    let kk = n1 / (3 * m + h);
    let a = (2 * m + h) * kk;
    let b = n1 - a;
    Ok((t, a, b))
}

/// Hajnal graph `H(n, m, h)`: a Kneser block `K`, an independent block `A`
/// of vertices `v_{ij}` (`i` over the ground set, `j < floor((n-|K|)/(3m+h))`),
/// and an independent block `B`. `A` is completely joined to `B`, and
/// `v_{ij}` is joined to the Kneser vertex `S` exactly when `i ∈ S`.
/// Triangle-free with chromatic number at least `h+2`.
pub fn hajnal(n: usize, m: usize, h: usize) -> Result<Graph> {
    let (t, a_size, _b_size) = hajnal_blocks(n, m, h)?;
    if n > MAX_ORDER {
        return Err(Error::TooLarge(n));
    }
    let index = KneserIndex::new(m, h)?;
    debug_assert_eq!(index.len(), t);
    let ground = index.ground_size();
    let kk = a_size / ground;
    let a_start = t;
    let b_start = t + a_size;
    let mut g = Graph::empty(n);
    // Kneser block
    for x in 0..t {
        for y in (x + 1)..t {
            if index.subset_of(x) & index.subset_of(y) == 0 {
                g.add_edge(x, y);
            }
        }
    }
    // A to B, complete
    for va in a_start..b_start {
        for vb in b_start..n {
            g.add_edge(va, vb);
        }
    }
    // v_{ij} to S_l when i is in S_l
    for i in 0..ground {
        for j in 0..kk {
            let va = a_start + i * kk + j;
            for l in 0..t {
                if index.subset_of(l) >> i & 1 == 1 {
                    g.add_edge(va, l);
                }
            }
        }
    }
    Ok(g)
}

/// Order of the Turán factor in the extended Hajnal construction.
pub fn hajnal_extended_split(r: usize, n: usize) -> usize {
    (2 * r - 4) * n / (2 * r - 1)
}

/// Extended Hajnal construction: the join of the `(r-2)`-partite Turán graph
/// on `floor((2r-4)n/(2r-1))` vertices with `H(rest, m, h-r)`.
/// `K_{r+1}`-free with chromatic number at least `h`.
pub fn hajnal_extended(r: usize, n: usize, m: usize, h: usize) -> Result<Graph> {
    if r < 3 {
        return Err(Error::InvalidParameter("hajnal-ext needs r >= 3".into()));
    }
    if h <= r {
        return Err(Error::InvalidParameter(format!(
            "hajnal-ext needs h > r, got h = {h}, r = {r}"
        )));
    }
    let n1 = hajnal_extended_split(r, n);
    let g1 = Graph::turan(r - 2, n1)?;
    let g2 = hajnal(n - n1, m, h - r)?;
    Ok(g1.join(&g2))
}

/// Häggkvist graph `H(k)` of order `29k`: blocks `A_0..A_4` (size `3k`),
/// `B_0..B_4` (size `2k`), `C` (size `4k`); `A_i ~ A_j` and `A_i ~ B_j` when
/// `i-j ≡ ±1 (mod 5)`, and `C` is completely joined to every `B_j`.
/// `10k`-regular, triangle-free, homomorphic to the Mycielski graph `M_3`.
pub fn haggkvist(k: usize) -> Result<Graph> {
    if k == 0 {
        return Err(Error::InvalidParameter("haggkvist needs k >= 1".into()));
    }
    let n = 29 * k;
    if n > MAX_ORDER {
        return Err(Error::TooLarge(n));
    }
    let a = |i: usize| (3 * k * i)..(3 * k * (i + 1));
    let b = |j: usize| (15 * k + 2 * k * j)..(15 * k + 2 * k * (j + 1));
    let c = (25 * k)..(29 * k);
    let mut g = Graph::empty(n);
    for i in 0..5usize {
        let j = (i + 1) % 5;
        for u in a(i) {
            for v in a(j) {
                g.add_edge(u, v);
            }
        }
        for u in a(i) {
            for v in b(j).chain(b((i + 4) % 5)) {
                g.add_edge(u, v);
            }
        }
    }
    for u in c {
        for v in (15 * k)..(25 * k) {
            g.add_edge(u, v);
        }
    }
    Ok(g)
}

/// Extended Häggkvist construction: the join of the `(r-2)`-partite Turán
/// graph on `n - 29*floor(n/(19r-9))` vertices with the Häggkvist graph
/// `H(floor(n/(19r-9)))`. `K_{r+1}`-free, `(r+2)`-chromatic, with minimum
/// degree above `(1 - 19/(19r-9))n - 1`.
pub fn haggkvist_extended(r: usize, n: usize) -> Result<Graph> {
    if r < 3 {
        return Err(Error::InvalidParameter("haggkvist-ext needs r >= 3".into()));
    }
    // n = 19r-9 itself is the cleanest divisible instance, so the bound is
    // inclusive: the construction only needs floor(n/(19r-9)) >= 1.
    if n < 19 * r - 9 {
        return Err(Error::InvalidParameter(format!(
            "haggkvist-ext needs n >= 19r-9 = {}, got n = {n}",
            19 * r - 9
        )));
    }
    let q = n / (19 * r - 9);
    let g1 = Graph::turan(r - 2, n - 29 * q)?;
    let g2 = haggkvist(q)?;
    Ok(g1.join(&g2))
}

/// Extended Andrásfai construction: the join of the `(r-2)`-partite Turán
/// graph with the blow-up `A_k(floor(n/((2k-1)r-k+1)))`. `K_{r+1}`-free,
/// `(r+1)`-chromatic, with minimum degree above
/// `(1 - (2k-1)/((2k-1)r-k+1))n - 1`.
pub fn andrasfai_blowup_example(r: usize, k: usize, n: usize) -> Result<Graph> {
    if r < 3 {
        return Err(Error::InvalidParameter("andrasfai-blowup needs r >= 3".into()));
    }
    if k == 0 {
        return Err(Error::InvalidParameter("andrasfai-blowup needs k >= 1".into()));
    }
    let d = (2 * k - 1) * r - k + 1;
    if n < d {
        return Err(Error::InvalidParameter(format!(
            "andrasfai-blowup needs n >= (2k-1)r-k+1 = {d}, got n = {n}"
        )));
    }
    let t = n / d;
    let g1 = Graph::turan(r - 2, n - (3 * k - 1) * t)?;
    let g2 = andrasfai(k)?.blow_up(t)?;
    Ok(g1.join(&g2))
}

/// A named construction with its integer parameters. Parses from and prints
/// to the canonical textual form used on the command line, e.g.
/// `andrasfai:k=4` or `haggkvist-ext:r=3,n=48`.
#[derive(Clone, Debug, PartialEq)]
pub enum FamilySpec {
    Andrasfai { k: usize },
    Mycielski { i: usize },
    Kneser { m: usize, h: usize },
    Turan { p: usize, n: usize },
    Hajnal { n: usize, m: usize, h: usize },
    HajnalExtended { r: usize, n: usize, m: usize, h: usize, eps: Option<Rat> },
    Haggkvist { k: usize },
    HaggkvistExtended { r: usize, n: usize },
    AndrasfaiBlowup { r: usize, k: usize, n: usize },
}

impl FamilySpec {
    pub fn generate(&self) -> Result<Graph> {
        match *self {
            FamilySpec::Andrasfai { k } => andrasfai(k),
            FamilySpec::Mycielski { i } => mycielski(i),
            FamilySpec::Kneser { m, h } => kneser(m, h),
            FamilySpec::Turan { p, n } => Graph::turan(p, n),
            FamilySpec::Hajnal { n, m, h } => hajnal(n, m, h),
            FamilySpec::HajnalExtended { r, n, m, h, .. } => hajnal_extended(r, n, m, h),
            FamilySpec::Haggkvist { k } => haggkvist(k),
            FamilySpec::HaggkvistExtended { r, n } => haggkvist_extended(r, n),
            FamilySpec::AndrasfaiBlowup { r, k, n } => andrasfai_blowup_example(r, k, n),
        }
    }

    pub fn family_name(&self) -> &'static str {
        match self {
            FamilySpec::Andrasfai { .. } => "andrasfai",
            FamilySpec::Mycielski { .. } => "mycielski",
            FamilySpec::Kneser { .. } => "kneser",
            FamilySpec::Turan { .. } => "turan",
            FamilySpec::Hajnal { .. } => "hajnal",
            FamilySpec::HajnalExtended { .. } => "hajnal-ext",
            FamilySpec::Haggkvist { .. } => "haggkvist",
            FamilySpec::HaggkvistExtended { .. } => "haggkvist-ext",
            FamilySpec::AndrasfaiBlowup { .. } => "andrasfai-blowup",
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Andrasfai { k } => write!(f, "andrasfai:k={k}"),
            FamilySpec::Mycielski { i } => write!(f, "mycielski:i={i}"),
            FamilySpec::Kneser { m, h } => write!(f, "kneser:m={m},h={h}"),
            FamilySpec::Turan { p, n } => write!(f, "turan:p={p},n={n}"),
            FamilySpec::Hajnal { n, m, h } => write!(f, "hajnal:n={n},m={m},h={h}"),
            FamilySpec::HajnalExtended { r, n, m, h, eps } => {
                write!(f, "hajnal-ext:r={r},n={n},m={m},h={h}")?;
                if let Some(e) = eps {
                    write!(f, ",eps={}/{}", e.numer(), e.denom())?;
                }
                Ok(())
            }
            FamilySpec::Haggkvist { k } => write!(f, "haggkvist:k={k}"),
            FamilySpec::HaggkvistExtended { r, n } => write!(f, "haggkvist-ext:r={r},n={n}"),
            FamilySpec::AndrasfaiBlowup { r, k, n } => {
                write!(f, "andrasfai-blowup:r={r},k={k},n={n}")
            }
        }
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<FamilySpec> {
        let bad = |msg: String| Error::FamilySpec(msg);
        let (name, rest) = s
            .split_once(':')
            .ok_or_else(|| bad(format!("expected family:params in {s:?}")))?;
        let mut params: BTreeMap<&str, &str> = BTreeMap::new();
        for pair in rest.split(',') {
            let (key, value) = pair
                .split_once('=')
                .ok_or_else(|| bad(format!("expected key=value, got {pair:?}")))?;
            if params.insert(key.trim(), value.trim()).is_some() {
                return Err(bad(format!("duplicate key {key:?}")));
            }
        }
        let mut take = |key: &str| -> Result<usize> {
            params
                .remove(key)
                .ok_or_else(|| bad(format!("{name} requires parameter {key:?}")))?
                .parse()
                .map_err(|_| bad(format!("parameter {key:?} must be a non-negative integer")))
        };
        let spec = match name {
            "andrasfai" => FamilySpec::Andrasfai { k: take("k")? },
            "mycielski" => FamilySpec::Mycielski { i: take("i")? },
            "kneser" => FamilySpec::Kneser { m: take("m")?, h: take("h")? },
            "turan" => FamilySpec::Turan { p: take("p")?, n: take("n")? },
            "hajnal" => FamilySpec::Hajnal { n: take("n")?, m: take("m")?, h: take("h")? },
            "hajnal-ext" => {
                let (r, n, m, h) = (take("r")?, take("n")?, take("m")?, take("h")?);
                let eps = match params.remove("eps") {
                    Some(e) => Some(parse_rat(e).map_err(|e| bad(e.to_string()))?),
                    None => None,
                };
                FamilySpec::HajnalExtended { r, n, m, h, eps }
            }
            "haggkvist" => FamilySpec::Haggkvist { k: take("k")? },
            "haggkvist-ext" => FamilySpec::HaggkvistExtended { r: take("r")?, n: take("n")? },
            "andrasfai-blowup" => {
                FamilySpec::AndrasfaiBlowup { r: take("r")?, k: take("k")?, n: take("n")? }
            }
            other => return Err(bad(format!("unknown family {other:?}"))),
        };
        if let Some(key) = params.keys().next() {
            return Err(bad(format!("unexpected parameter {key:?} for {name}")));
        }
        Ok(spec)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::is_isomorphic;

    #[test]
    fn andrasfai_small() {
        assert_eq!(andrasfai(1).unwrap(), Graph::complete(2));
        let a2 = andrasfai(2).unwrap();
        assert_eq!(a2.order(), 5);
        assert_eq!(a2.is_regular(), Some(2));
        assert!(is_isomorphic(&a2, &Graph::cycle_power(5, 1).unwrap()).unwrap());
        let a4 = andrasfai(4).unwrap();
        assert_eq!(a4.order(), 11);
        assert_eq!(a4.is_regular(), Some(4));
        assert!(andrasfai(0).is_err());
    }

    #[test]
    fn mycielski_small() {
        assert_eq!(mycielski(1).unwrap(), Graph::complete(2));
        let m2 = mycielski(2).unwrap();
        assert_eq!(m2.order(), 5);
        assert!(is_isomorphic(&m2, &Graph::cycle_power(5, 1).unwrap()).unwrap());
        let m3 = mycielski(3).unwrap();
        assert_eq!(m3.order(), 11);
        assert_eq!(m3.edge_count(), 20);
        assert!(mycielski(0).is_err());
    }

    #[test]
    fn mycielski_orders_chain() {
        let mut prev = mycielski(1).unwrap().order();
        for i in 2..=5 {
            let n = mycielski(i).unwrap().order();
            assert_eq!(n, 2 * prev + 1);
            prev = n;
        }
    }

    #[test]
    fn kneser_small() {
        let pet = kneser(2, 1).unwrap();
        assert_eq!(pet.order(), 10);
        assert_eq!(pet.is_regular(), Some(3));
        assert_eq!(kneser(1, 0).unwrap(), Graph::complete(2));
        let k = kneser(2, 2).unwrap();
        assert_eq!(k.order(), 15);
        assert_eq!(k.is_regular(), Some(6)); // C(m+h, m) = C(4, 2)
    }

    #[test]
    fn kneser_index_bijection() {
        let idx = KneserIndex::new(2, 1).unwrap();
        assert_eq!(idx.len(), 10);
        assert_eq!(idx.subset_of(0), 0b00011);
        assert_eq!(idx.subset_of(9), 0b11000);
        for l in 0..idx.len() {
            assert_eq!(idx.label_of(idx.subset_of(l)), Some(l));
            assert_eq!(idx.subset_of(l).count_ones(), 2);
        }
        // colex: strictly ascending as masks
        assert!(idx.subsets().windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn hajnal_blocks_and_degrees() {
        assert_eq!(hajnal_blocks(24, 2, 1).unwrap(), (10, 10, 4));
        let g = hajnal(24, 2, 1).unwrap();
        assert_eq!(g.order(), 24);
        assert_eq!(g.min_degree(), Some(7));
        // boundary of the precondition
        assert!(hajnal(17, 2, 1).is_ok());
        assert!(hajnal(16, 2, 1).is_err());
    }

    #[test]
    fn haggkvist_shape() {
        let g = haggkvist(1).unwrap();
        assert_eq!(g.order(), 29);
        assert_eq!(g.is_regular(), Some(10));
        let g = haggkvist(2).unwrap();
        assert_eq!(g.order(), 58);
        assert_eq!(g.is_regular(), Some(20));
        assert!(haggkvist(0).is_err());
    }

    #[test]
    fn extended_examples_shape() {
        let g = haggkvist_extended(3, 48).unwrap();
        assert_eq!(g.order(), 48);
        assert_eq!(g.min_degree(), Some(29));
        assert!(haggkvist_extended(3, 50).is_ok());
        assert!(haggkvist_extended(3, 47).is_err()); // below 19r-9 = 48
        let g = andrasfai_blowup_example(3, 2, 16).unwrap();
        assert_eq!(g.order(), 16);
        assert_eq!(g.min_degree(), Some(10));
        assert!(andrasfai_blowup_example(3, 2, 8).is_ok()); // n = (2k-1)r-k+1 exactly
        assert!(andrasfai_blowup_example(3, 2, 7).is_err());
        assert!(andrasfai_blowup_example(2, 2, 16).is_err());
    }

    #[test]
    fn hajnal_extended_shape() {
        let g = hajnal_extended(3, 60, 2, 5).unwrap();
        assert_eq!(g.order(), 60);
        assert_eq!(hajnal_extended_split(3, 60), 24);
        assert!(hajnal_extended(3, 60, 2, 3).is_err()); // h must exceed r
    }

    #[test]
    fn family_spec_round_trip() {
        let specs = [
            "andrasfai:k=4",
            "mycielski:i=3",
            "kneser:m=2,h=1",
            "turan:p=2,n=4",
            "hajnal:n=24,m=2,h=1",
            "hajnal-ext:r=3,n=60,m=2,h=5",
            "hajnal-ext:r=3,n=60,m=2,h=5,eps=1/10",
            "haggkvist:k=1",
            "haggkvist-ext:r=3,n=48",
            "andrasfai-blowup:r=3,k=2,n=16",
        ];
        for s in specs {
            let spec: FamilySpec = s.parse().unwrap();
            assert_eq!(spec.to_string(), s);
        }
        // key order is free on input
        let spec: FamilySpec = "hajnal:m=2,h=1,n=24".parse().unwrap();
        assert_eq!(spec.to_string(), "hajnal:n=24,m=2,h=1");
        assert!("nope:k=1".parse::<FamilySpec>().is_err());
        assert!("andrasfai:k=1,z=2".parse::<FamilySpec>().is_err());
        assert!("andrasfai".parse::<FamilySpec>().is_err());
    }
}
