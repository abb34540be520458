//! Verifiable witnesses. Every certificate re-validates in polynomial time
//! from its JSON document alone: the document carries the graph6 encodings of
//! its subject graph(s) next to the witness payload.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6::{from_graph6, to_graph6};

/// Witness payloads, checked against their subject graphs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    /// Pairwise-adjacent vertex set.
    Clique(Vec<usize>),
    /// Proper coloring, one color per vertex.
    Coloring(Vec<u32>),
    /// Edge-preserving map into a second graph.
    Homomorphism(Vec<usize>),
    /// Injective edge-preserving map of a pattern (second graph) into the
    /// subject.
    Embedding(Vec<usize>),
    /// Vertex whose non-neighborhood induces no edge.
    LemmaVertex(usize),
}

impl Certificate {
    /// Validates the certificate against its subject, and for homomorphisms
    /// and embeddings the second graph (target resp. pattern).
    pub fn check(&self, subject: &Graph, second: Option<&Graph>) -> Result<()> {
        let fail = |msg: String| Err(Error::Certificate(msg));
        match self {
            Certificate::Clique(vs) => {
                for (i, &u) in vs.iter().enumerate() {
                    if u >= subject.order() {
                        return fail(format!("clique vertex {u} out of range"));
                    }
                    for &v in &vs[i + 1..] {
                        if u == v || !subject.has_edge(u, v) {
                            return fail(format!("clique pair ({u},{v}) not adjacent"));
                        }
                    }
                }
                Ok(())
            }
            Certificate::Coloring(colors) => {
                if colors.len() != subject.order() {
                    return fail("coloring length mismatch".into());
                }
                match subject.edges().find(|&(u, v)| colors[u] == colors[v]) {
                    Some((u, v)) => fail(format!("edge ({u},{v}) is monochromatic")),
                    None => Ok(()),
                }
            }
            Certificate::Homomorphism(map) => {
                let target = second
                    .ok_or_else(|| Error::Certificate("homomorphism needs a target graph".into()))?;
                if map.len() != subject.order() {
                    return fail("homomorphism length mismatch".into());
                }
                if let Some(&x) = map.iter().find(|&&x| x >= target.order()) {
                    return fail(format!("image {x} out of range"));
                }
                match subject.edges().find(|&(u, v)| !target.has_edge(map[u], map[v])) {
                    Some((u, v)) => fail(format!("edge ({u},{v}) is not preserved")),
                    None => Ok(()),
                }
            }
            Certificate::Embedding(map) => {
                let pattern = second
                    .ok_or_else(|| Error::Certificate("embedding needs a pattern graph".into()))?;
                if map.len() != pattern.order() {
                    return fail("embedding length mismatch".into());
                }
                let mut seen = vec![false; subject.order()];
                for &x in map {
                    if x >= subject.order() {
                        return fail(format!("image {x} out of range"));
                    }
                    if seen[x] {
                        return fail(format!("image {x} repeated"));
                    }
                    seen[x] = true;
                }
                match pattern.edges().find(|&(u, v)| !subject.has_edge(map[u], map[v])) {
                    Some((u, v)) => fail(format!("pattern edge ({u},{v}) is not preserved")),
                    None => Ok(()),
                }
            }
            Certificate::LemmaVertex(u) => {
                if *u >= subject.order() {
                    return fail(format!("vertex {u} out of range"));
                }
                if crate::solve::is_lemma_vertex(subject, *u) {
                    Ok(())
                } else {
                    fail(format!("non-neighborhood of {u} induces an edge"))
                }
            }
        }
    }

    /// Wraps the certificate with its subject graph(s) for serialization.
    pub fn into_doc(self, subject: &Graph, second: Option<&Graph>) -> CertificateDoc {
        let mut graphs = vec![to_graph6(subject)];
        if let Some(g) = second {
            graphs.push(to_graph6(g));
        }
        match self {
            Certificate::Clique(vertices) => CertificateDoc::Clique { graphs, vertices },
            Certificate::Coloring(colors) => CertificateDoc::Coloring { graphs, colors },
            Certificate::Homomorphism(map) => CertificateDoc::Homomorphism { graphs, map },
            Certificate::Embedding(map) => CertificateDoc::Embedding { graphs, map },
            Certificate::LemmaVertex(vertex) => CertificateDoc::LemmaVertex { graphs, vertex },
        }
    }
}

/// Self-contained JSON form of a certificate:
/// `{"kind": ..., "graphs": [graph6, ...], <payload>}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum CertificateDoc {
    Clique { graphs: Vec<String>, vertices: Vec<usize> },
    Coloring { graphs: Vec<String>, colors: Vec<u32> },
    Homomorphism { graphs: Vec<String>, map: Vec<usize> },
    Embedding { graphs: Vec<String>, map: Vec<usize> },
    LemmaVertex { graphs: Vec<String>, vertex: usize },
}

impl CertificateDoc {
    fn graphs(&self) -> &[String] {
        match self {
            CertificateDoc::Clique { graphs, .. }
            | CertificateDoc::Coloring { graphs, .. }
            | CertificateDoc::Homomorphism { graphs, .. }
            | CertificateDoc::Embedding { graphs, .. }
            | CertificateDoc::LemmaVertex { graphs, .. } => graphs,
        }
    }

    fn certificate(&self) -> Certificate {
        match self {
            CertificateDoc::Clique { vertices, .. } => Certificate::Clique(vertices.clone()),
            CertificateDoc::Coloring { colors, .. } => Certificate::Coloring(colors.clone()),
            CertificateDoc::Homomorphism { map, .. } => Certificate::Homomorphism(map.clone()),
            CertificateDoc::Embedding { map, .. } => Certificate::Embedding(map.clone()),
            CertificateDoc::LemmaVertex { vertex, .. } => Certificate::LemmaVertex(*vertex),
        }
    }

    /// Decodes the embedded graphs and re-validates the witness.
    pub fn check(&self) -> Result<()> {
        let graphs = self.graphs();
        let needs_two = matches!(
            self,
            CertificateDoc::Homomorphism { .. } | CertificateDoc::Embedding { .. }
        );
        if graphs.is_empty() || (needs_two && graphs.len() < 2) {
            return Err(Error::Certificate("missing subject graph".into()));
        }
        let subject = from_graph6(&graphs[0])?;
        let second = graphs.get(1).map(|s| from_graph6(s)).transpose()?;
        self.certificate().check(&subject, second.as_ref())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::mycielski;
    use crate::solve::{find_clique, is_k_colorable};

    #[test]
    fn clique_doc_round_trip() {
        let g = Graph::complete(4);
        let c = Certificate::Clique(find_clique(&g, 3, 1 << 16).found().unwrap());
        c.check(&g, None).unwrap();
        let doc = c.into_doc(&g, None);
        let json = serde_json::to_string(&doc).unwrap();
        let back: CertificateDoc = serde_json::from_str(&json).unwrap();
        back.check().unwrap();
        assert_eq!(back, doc);
    }

    #[test]
    fn coloring_check_catches_corruption() {
        let m3 = mycielski(3).unwrap();
        let mut colors = is_k_colorable(&m3, 4, 1 << 20).found().unwrap();
        Certificate::Coloring(colors.clone()).check(&m3, None).unwrap();
        colors[0] = colors[1]; // vertices 0 and 1 are adjacent in M_1 = K_2
        assert!(Certificate::Coloring(colors).check(&m3, None).is_err());
    }

    #[test]
    fn homomorphism_doc_requires_target() {
        let doc = CertificateDoc::Homomorphism {
            graphs: vec!["@".into()],
            map: vec![0],
        };
        assert!(doc.check().is_err());
    }

    #[test]
    fn embedding_rejects_repeats() {
        let g = Graph::complete(3);
        let p = Graph::complete(2);
        assert!(Certificate::Embedding(vec![1, 1]).check(&g, Some(&p)).is_err());
        Certificate::Embedding(vec![1, 2]).check(&g, Some(&p)).unwrap();
    }
}
