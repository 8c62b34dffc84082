use std::fmt;

use hcc_core::{Partition, StatsSnapshot, VertexSet};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Decision {
    Yes,
    No,
}

/// A decision, or an optimum value for optimisation runs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Answer {
    Decision(Decision),
    Value(usize),
}

impl Answer {
    pub fn yes(found: bool) -> Answer {
        Answer::Decision(if found { Decision::Yes } else { Decision::No })
    }

    pub fn is_no(&self) -> bool {
        *self == Answer::Decision(Decision::No)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Certificate {
    Partition {
        blocks: Vec<Vec<usize>>,
        deleted_edges: Vec<(usize, usize)>,
    },
    VertexSet {
        vertices: Vec<usize>,
    },
}

impl Certificate {
    pub fn partition(p: &Partition, deleted_edges: Vec<(usize, usize)>) -> Self {
        Certificate::Partition {
            blocks: p.to_vecs(),
            deleted_edges,
        }
    }

    pub fn vertices(set: &VertexSet) -> Self {
        Certificate::VertexSet {
            vertices: set.to_vec(),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Params {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub s: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub a: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed_set: Option<Vec<usize>>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunStats {
    pub elapsed_ms: u64,
    pub branch_nodes: u64,
    pub cuts_enumerated: u64,
    pub convolutions: u64,
}

impl RunStats {
    pub fn new(elapsed_ms: u64, s: StatsSnapshot) -> Self {
        RunStats {
            elapsed_ms,
            branch_nodes: s.branch_nodes,
            cuts_enumerated: s.cuts_enumerated,
            convolutions: s.convolutions,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunReport {
    pub problem: String,
    pub instance: String,
    pub params: Params,
    pub answer: Answer,
    pub certificate: Option<Certificate>,
    pub stats: RunStats,
}

fn join<T: fmt::Display>(items: &[T], sep: &str) -> String {
    items.iter().map(T::to_string).collect::<Vec<_>>().join(sep)
}

impl fmt::Display for RunReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "problem: {}", self.problem)?;
        writeln!(f, "instance: {}", self.instance)?;
        let p = &self.params;
        let mut params = Vec::new();
        for (name, v) in [("k", p.k), ("p", p.p), ("s", p.s), ("a", p.a)] {
            if let Some(v) = v {
                params.push(format!("{name}={v}"));
            }
        }
        if let Some(seed) = &p.seed_set {
            params.push(format!("seed_set={}", join(seed, ",")));
        }
        writeln!(f, "params: {}", params.join(" "))?;
        match self.answer {
            Answer::Decision(Decision::Yes) => writeln!(f, "answer: yes")?,
            Answer::Decision(Decision::No) => writeln!(f, "answer: no")?,
            Answer::Value(v) => writeln!(f, "answer: {v}")?,
        }
        match &self.certificate {
            None => {}
            Some(Certificate::Partition {
                blocks,
                deleted_edges,
            }) => {
                let edges: Vec<String> = deleted_edges.iter().map(|(u, v)| format!("{u}-{v}")).collect();
                writeln!(f, "deleted edges ({}): {}", edges.len(), edges.join(" "))?;
                for b in blocks {
                    writeln!(f, "block: {}", join(b, " "))?;
                }
            }
            Some(Certificate::VertexSet { vertices }) => {
                writeln!(f, "vertices: {}", join(vertices, " "))?;
            }
        }
        let s = &self.stats;
        writeln!(
            f,
            "stats: {} ms, {} branch nodes, {} cuts, {} convolutions",
            s.elapsed_ms, s.branch_nodes, s.cuts_enumerated, s.convolutions
        )
    }
}
