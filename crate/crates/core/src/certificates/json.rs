//! Certificate JSON.
//!
//! ```json
//! {"type":"stable","n":9,"params":{"k":2,"t":3,"d":2,"mode":"faithful"},"set":[0,2,4,6]}
//! {"type":"subdivision","n":9,"params":{...},"branch":[0,3,6],
//!  "paths":[{"pair":[0,1],"vertices":[1,2]}, ...],"min_len":3,"max_len":10}
//! ```
//!
//! `min_len`/`max_len` are optional on input and default to 3 and
//! `floor((log n)^2)`.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::bounds::max_subdivision_len;
use super::{ClaimedMode, PairPath, StableSetCertificate, SubdivisionCertificate};

#[derive(Debug, Error)]
pub enum SchemaError {
    #[error("malformed certificate JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertParams {
    pub k: usize,
    pub t: usize,
    pub d: usize,
    pub mode: ClaimedMode,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CertificateBody {
    Stable(StableSetCertificate),
    Subdivision(SubdivisionCertificate),
}

/// A certificate together with the instance it speaks about.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub n: usize,
    pub params: CertParams,
    pub body: CertificateBody,
}

#[derive(Serialize, Deserialize)]
struct PathJson {
    pair: [usize; 2],
    vertices: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase", deny_unknown_fields)]
enum Wire {
    Stable {
        n: usize,
        params: CertParams,
        set: Vec<usize>,
    },
    Subdivision {
        n: usize,
        params: CertParams,
        branch: Vec<usize>,
        paths: Vec<PathJson>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        min_len: Option<usize>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        max_len: Option<usize>,
    },
}

impl Certificate {
    pub fn to_json(&self) -> String {
        let wire = match &self.body {
            CertificateBody::Stable(s) => Wire::Stable {
                n: self.n,
                params: self.params,
                set: s.set.clone(),
            },
            CertificateBody::Subdivision(c) => Wire::Subdivision {
                n: self.n,
                params: self.params,
                branch: c.branch.clone(),
                paths: c
                    .paths
                    .iter()
                    .map(|p| PathJson {
                        pair: [p.pair.0, p.pair.1],
                        vertices: p.vertices.clone(),
                    })
                    .collect(),
                min_len: Some(c.min_len),
                max_len: Some(c.max_len),
            },
        };
        serde_json::to_string(&wire).expect("certificate serialises")
    }

    pub fn from_json(text: &str) -> Result<Self, SchemaError> {
        Ok(match serde_json::from_str::<Wire>(text)? {
            Wire::Stable { n, params, set } => Certificate {
                n,
                params,
                body: CertificateBody::Stable(StableSetCertificate {
                    set,
                    claimed_mode: params.mode,
                }),
            },
            Wire::Subdivision {
                n,
                params,
                branch,
                paths,
                min_len,
                max_len,
            } => {
                let t = branch.len();
                let paths = paths
                    .into_iter()
                    .map(|p| PairPath {
                        pair: (p.pair[0], p.pair[1]),
                        vertices: p.vertices,
                    })
                    .collect();
                Certificate {
                    n,
                    params,
                    body: CertificateBody::Subdivision(SubdivisionCertificate {
                        t,
                        branch,
                        paths,
                        min_len: min_len.unwrap_or(3),
                        max_len: max_len.unwrap_or_else(|| max_subdivision_len(n)),
                    }),
                }
            }
        })
    }

    pub fn read(path: impl AsRef<std::path::Path>) -> Result<Self, SchemaError> {
        Self::from_json(&std::fs::read_to_string(path)?)
    }
}
