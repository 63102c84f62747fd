use std::fmt;

/// One decision of the extractor.
///
/// Rendered as `claim=<id> branch=<name> |set|=<size> depth=<d> n=<view size>`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceRecord {
    pub claim: &'static str,
    pub branch: &'static str,
    pub set: usize,
    pub depth: usize,
    pub n: usize,
}

impl fmt::Display for TraceRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "claim={} branch={} |set|={} depth={} n={}",
            self.claim, self.branch, self.set, self.depth, self.n
        )
    }
}

/// Claim identifiers in the order the construction reaches them.
const ORDER: &[&str] = &[
    "base", "budget", "greedy", "1", "2", "3", "4", "5", "6", "7", "8", "9", "assemble",
];

/// Position of a claim id in construction order (unknown ids sort first).
pub fn claim_rank(claim: &str) -> usize {
    ORDER.iter().position(|c| *c == claim).unwrap_or(0)
}

/// The furthest claim any record reached.
pub fn deepest_claim(trace: &[TraceRecord]) -> &'static str {
    trace
        .iter()
        .map(|r| r.claim)
        .max_by_key(|c| claim_rank(c))
        .unwrap_or("none")
}

pub fn render(trace: &[TraceRecord]) -> String {
    let mut out = String::new();
    for r in trace {
        out.push_str(&r.to_string());
        out.push('\n');
    }
    out
}
