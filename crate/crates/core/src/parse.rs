//! Text input: `n=<int>; gens=<g1>;<g2>;...` where each generator is a
//! product of disjoint 1-based cycles `(1,2,3)(4,5)`, the identity `()`, or
//! a signed image list `[-2,1,3]` (`x1 ↦ -x2`, `x2 ↦ x1`, `x3 ↦ x3`).

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::perm::{group_from_generators, Group, Permutation, SignedPermutation};

/// Largest rank accepted; groups are stored by full enumeration.
pub const MAX_RANK: usize = 10;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupInput {
    pub n: usize,
    pub generators: Vec<SignedPermutation>,
}

impl GroupInput {
    pub fn group(&self) -> Result<Group> {
        group_from_generators(self.n, &self.generators)
    }

    /// Canonical text form, accepted back by [`parse_group`].
    pub fn render(&self) -> String {
        let gens: Vec<String> = self.generators.iter().map(|g| g.to_string()).collect();
        format!("n={}; gens={}", self.n, gens.join(";"))
    }
}

fn parse_err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

fn normalize(text: &str) -> String {
    text.chars()
        .filter(|c| !c.is_whitespace())
        .map(|c| if c == '−' { '-' } else { c })
        .collect()
}

pub fn parse_group(text: &str) -> Result<GroupInput> {
    let text = normalize(text);
    let mut segments = text.split(';').peekable();
    let head = segments.next().unwrap_or_default();
    let n_text = head
        .strip_prefix("n=")
        .ok_or_else(|| parse_err(format!("expected `n=<int>`, found `{head}`")))?;
    let n: usize = n_text
        .parse()
        .map_err(|_| parse_err(format!("invalid rank `{n_text}`")))?;
    if n == 0 {
        return Err(parse_err("rank must be positive"));
    }
    if n > MAX_RANK {
        return Err(Error::Unsupported(format!("rank {n} exceeds {MAX_RANK}")));
    }
    let first = segments
        .next()
        .ok_or_else(|| parse_err("missing `gens=`"))?;
    let first = first
        .strip_prefix("gens=")
        .ok_or_else(|| parse_err(format!("expected `gens=...`, found `{first}`")))?;
    let mut raw = vec![first];
    raw.extend(segments);
    // tolerate one trailing separator
    if raw.len() > 1 && raw.last() == Some(&"") {
        raw.pop();
    }
    let generators = raw
        .into_iter()
        .map(|g| parse_generator(g, n))
        .collect::<Result<Vec<_>>>()?;
    Ok(GroupInput { n, generators })
}

pub fn parse_generator(text: &str, n: usize) -> Result<SignedPermutation> {
    let text = normalize(text);
    if text.is_empty() {
        return Err(parse_err("empty generator"));
    }
    if let Some(body) = text.strip_prefix('[') {
        let body = body
            .strip_suffix(']')
            .ok_or_else(|| parse_err(format!("unterminated image list `{text}`")))?;
        let images = body
            .split(',')
            .map(|t| {
                t.parse::<i64>()
                    .map_err(|_| parse_err(format!("invalid image `{t}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        if images.len() != n {
            return Err(Error::RankMismatch {
                expected: n,
                found: images.len(),
            });
        }
        return SignedPermutation::from_signed_images(&images).map_err(to_parse);
    }
    let mut cycles: Vec<Vec<usize>> = Vec::new();
    let mut rest = text.as_str();
    while !rest.is_empty() {
        let inner = rest
            .strip_prefix('(')
            .ok_or_else(|| parse_err(format!("malformed cycle at `{rest}`")))?;
        let close = inner
            .find(')')
            .ok_or_else(|| parse_err(format!("unterminated cycle at `{rest}`")))?;
        let body = &inner[..close];
        if !body.is_empty() {
            let cycle = body
                .split(',')
                .map(|t| {
                    t.parse::<usize>().map_err(|_| {
                        parse_err(format!("malformed cycle entry `{t}` in `({body})`"))
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            cycles.push(cycle);
        }
        rest = &inner[close + 1..];
    }
    let perm = Permutation::from_cycles(n, &cycles).map_err(to_parse)?;
    Ok(perm.into())
}

fn to_parse(e: Error) -> Error {
    match e {
        Error::InvalidInput(m) => Error::Parse(m),
        other => other,
    }
}

/// `z1,z2,...,zn`.
pub fn parse_point(text: &str, n: usize) -> Result<Vec<BigInt>> {
    let text = normalize(text);
    let point = text
        .split(',')
        .map(|t| {
            t.parse::<BigInt>()
                .map_err(|_| parse_err(format!("invalid coordinate `{t}`")))
        })
        .collect::<Result<Vec<_>>>()?;
    if point.len() != n {
        return Err(Error::RankMismatch {
            expected: n,
            found: point.len(),
        });
    }
    Ok(point)
}
