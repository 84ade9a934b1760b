use std::fmt;
use std::ops::Mul;

use serde::Serialize;
use smallvec::SmallVec;

use crate::error::{Error, Result};

/// Largest supported degree: points are stored as `u8`.
pub const MAX_DEGREE: usize = 256;

type Images = SmallVec<[u8; 16]>;

/// A bijection on `{0, …, n-1}`.
///
/// Products are read left to right: `p * q` applies `p` first and then `q`,
/// so `(p * q).apply(x) == q.apply(p.apply(x))`. This is the right-action
/// convention `x θ (gf) = (x θ g) θ f` used for inner mappings and twisted
/// automorphisms throughout the crate.
///
/// The derived `Ord` is lexicographic on the image array; group element lists
/// are kept in that order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Perm {
    images: Images,
}

impl Perm {
    pub fn identity(degree: usize) -> Self {
        assert!(degree <= MAX_DEGREE, "degree {degree} exceeds {MAX_DEGREE}");
        Perm {
            images: (0..degree).map(|x| x as u8).collect(),
        }
    }

    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        if n > MAX_DEGREE {
            return Err(Error::NotAPermutation(format!("degree {n} exceeds {MAX_DEGREE}")));
        }
        let mut seen = vec![false; n];
        for &x in images {
            if x >= n || seen[x] {
                return Err(Error::NotAPermutation(format!("{images:?}")));
            }
            seen[x] = true;
        }
        Ok(Perm {
            images: images.iter().map(|&x| x as u8).collect(),
        })
    }

    /// Builds a permutation from a function already known to be a bijection.
    pub(crate) fn from_fn_unchecked(degree: usize, f: impl Fn(usize) -> usize) -> Self {
        let p = Perm {
            images: (0..degree).map(|x| f(x) as u8).collect(),
        };
        debug_assert!(p.is_bijection(), "not a bijection: {p:?}");
        p
    }

    fn is_bijection(&self) -> bool {
        let mut seen = vec![false; self.degree()];
        self.images.iter().all(|&x| {
            let x = x as usize;
            x < seen.len() && !std::mem::replace(&mut seen[x], true)
        })
    }

    /// Builds a permutation from disjoint cycles of point indices.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut touched = vec![false; degree];
        for cycle in cycles {
            for (i, &a) in cycle.iter().enumerate() {
                if a >= degree || touched[a] {
                    return Err(Error::NotAPermutation(format!("bad cycle {cycle:?}")));
                }
                touched[a] = true;
                images[a] = cycle[(i + 1) % cycle.len()];
            }
        }
        Perm::from_images(&images)
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x] as usize
    }

    pub fn images(&self) -> impl ExactSizeIterator<Item = usize> + '_ {
        self.images.iter().map(|&x| x as usize)
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    pub fn fixes(&self, x: usize) -> bool {
        self.apply(x) == x
    }

    pub fn inverse(&self) -> Perm {
        let mut images: Images = SmallVec::from_elem(0, self.degree());
        for (i, &x) in self.images.iter().enumerate() {
            images[x as usize] = i as u8;
        }
        Perm { images }
    }

    /// `self` then `other`; fails on a degree mismatch.
    pub fn compose(&self, other: &Perm) -> Result<Perm> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch(self.degree(), other.degree()));
        }
        Ok(self.then(other))
    }

    /// `self` then `other`, degrees assumed equal.
    #[inline]
    pub fn then(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm {
            images: self.images.iter().map(|&x| other.images[x as usize]).collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.cycles()
            .iter()
            .map(Vec::len)
            .fold(1, |acc, len| acc / gcd(acc, len) * len)
    }

    /// Nontrivial cycles, each starting at its least point, ordered by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.fixes(start) {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.apply(x);
            }
            out.push(cycle);
        }
        out
    }

    /// Number of moved points.
    pub fn support_size(&self) -> usize {
        (0..self.degree()).filter(|&x| !self.fixes(x)).count()
    }

    /// Cycle notation over `labels`, e.g. `(2 3)(4 5)`; the identity is `I`.
    pub fn to_cycle_string(&self, labels: &[String]) -> String {
        self.render(labels, " ")
    }

    /// Cycle notation without separators when every label is a single
    /// character (`(234)`), comma-separated otherwise. Never contains spaces.
    pub fn to_compact_string(&self, labels: &[String]) -> String {
        let sep = if labels.iter().all(|l| l.chars().count() == 1) {
            ""
        } else {
            ","
        };
        self.render(labels, sep)
    }

    fn render(&self, labels: &[String], sep: &str) -> String {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return "I".to_string();
        }
        let mut s = String::new();
        for cycle in cycles {
            s.push('(');
            let parts: Vec<&str> = cycle.iter().map(|&x| labels[x].as_str()).collect();
            s.push_str(&parts.join(sep));
            s.push(')');
        }
        s
    }

    /// Parses cycle notation over `labels`. Accepts `I`, `()`, `(2 3)(4 5)`,
    /// `(2,3)`, and `(234)` when every label is one character.
    pub fn parse_cycles(text: &str, labels: &[String]) -> Result<Perm> {
        let n = labels.len();
        let text = text.trim();
        if text == "I" || text.is_empty() {
            return Ok(Perm::identity(n));
        }
        let lookup = |tok: &str| -> Result<usize> {
            labels
                .iter()
                .position(|l| l == tok)
                .ok_or_else(|| Error::UnknownLabel(tok.to_string()))
        };
        let single_char = labels.iter().all(|l| l.chars().count() == 1);
        let mut cycles = Vec::new();
        let mut rest = text;
        while !rest.is_empty() {
            rest = rest.trim_start();
            if rest.is_empty() {
                break;
            }
            let body = rest
                .strip_prefix('(')
                .and_then(|r| r.find(')').map(|end| (&r[..end], &r[end + 1..])))
                .ok_or_else(|| Error::NotAPermutation(format!("malformed cycle notation `{text}`")))?;
            let (inner, tail) = body;
            rest = tail;
            let tokens: Vec<&str> = inner
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|t| !t.is_empty())
                .collect();
            let cycle = if tokens.len() == 1 && single_char && lookup(tokens[0]).is_err() {
                let mut buf = [0u8; 4];
                tokens[0]
                    .chars()
                    .map(|c| lookup(c.encode_utf8(&mut buf)))
                    .collect::<Result<Vec<_>>>()?
            } else {
                tokens.into_iter().map(lookup).collect::<Result<Vec<_>>>()?
            };
            if cycle.len() > 1 {
                cycles.push(cycle);
            }
        }
        Perm::from_cycles(n, &cycles)
    }
}

impl Mul for &Perm {
    type Output = Perm;

    /// Left-to-right product; panics on a degree mismatch.
    fn mul(self, rhs: &Perm) -> Perm {
        assert_eq!(self.degree(), rhs.degree(), "degree mismatch");
        self.then(rhs)
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm{:?}", self.images.as_slice())
    }
}

/// Cycle notation on the raw point indices.
impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels: Vec<String> = (0..self.degree()).map(|i| i.to_string()).collect();
        f.write_str(&self.to_cycle_string(&labels))
    }
}

pub(crate) fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}
