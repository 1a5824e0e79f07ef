//! JSON certificate documents.

use serde::{Deserialize, Serialize};

use crate::distpack::DistResult;
use crate::error::{Error, Result};
use crate::graph::{Cycle, Vertex, VertexSet};
use crate::packing::{f_bound, Certificate};
use crate::treedecomp::TreeDecomposition;

/// Which size bound a hitting set is held to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BoundVariant {
    /// `⌊9·s_k + 164(k−1)⌋`
    General,
    /// `6k`
    Planar,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "kebab-case")]
pub enum CertificateFile {
    Packing {
        k: usize,
        cycles: Vec<Vec<Vertex>>,
    },
    Hitting {
        k: usize,
        radius: usize,
        #[serde(rename = "X")]
        x: Vec<Vertex>,
        bound: usize,
        variant: BoundVariant,
    },
    DistancePacking {
        d: usize,
        cycles: Vec<Vec<Vertex>>,
    },
    DistanceHitting {
        d: usize,
        #[serde(rename = "X1")]
        x1: Vec<Vertex>,
        #[serde(rename = "X2")]
        x2: Vec<Vertex>,
    },
    TreeDecomposition {
        k: usize,
        t: usize,
        bags: Vec<Vec<Vertex>>,
        edges: Vec<(usize, usize)>,
        independence: usize,
    },
}

fn cycle_lists(cycles: &[Cycle]) -> Vec<Vec<Vertex>> {
    cycles.iter().map(|c| c.vertices().to_vec()).collect()
}

/// Hitting-set size bound for `k` under `variant`.
pub fn hitting_bound(k: usize, variant: BoundVariant) -> Result<usize> {
    Ok(match variant {
        BoundVariant::General => f_bound(k)?.floor() as usize,
        BoundVariant::Planar => 6 * k,
    })
}

impl CertificateFile {
    pub fn from_certificate(cert: &Certificate, k: usize, variant: BoundVariant) -> Result<Self> {
        Ok(match cert {
            Certificate::InducedPacking { cycles } => CertificateFile::Packing {
                k,
                cycles: cycle_lists(cycles),
            },
            Certificate::HittingSet { x, radius } => CertificateFile::Hitting {
                k,
                radius: *radius,
                x: x.to_vec(),
                bound: hitting_bound(k, variant)?,
                variant,
            },
        })
    }

    pub fn from_dist(res: &DistResult, d: usize) -> Self {
        match res {
            DistResult::TwoCycles(a, b) => CertificateFile::DistancePacking {
                d,
                cycles: cycle_lists(&[a.clone(), b.clone()]),
            },
            DistResult::Hitting { x1, x2, .. } => CertificateFile::DistanceHitting {
                d,
                x1: x1.to_vec(),
                x2: x2.to_vec(),
            },
        }
    }

    pub fn from_tree_decomposition(td: &TreeDecomposition, k: usize, t: usize, independence: usize) -> Self {
        CertificateFile::TreeDecomposition {
            k,
            t,
            bags: td.bags.iter().map(VertexSet::to_vec).collect(),
            edges: td.edges.clone(),
            independence,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("certificate serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::InvalidInput(format!("certificate: {e}")))
    }
}
