//! Validated Cayley tables of right loops.
//!
//! Entry `(x, y)` of a table is `x ∘ y`: the row is the left operand. The
//! identity is always element 0; right translations `x ↦ x ∘ a` are
//! bijections, so right division `b / a` (the unique `s` with `s ∘ a = b`)
//! is always defined and cached.

use crate::error::{Error, Result};
use crate::permgroup::{GroupTable, Perm, MAX_DEGREE};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RightLoop {
    n: usize,
    op: Vec<u8>,
    rdiv: Vec<u8>,
    labels: Vec<String>,
    left_inverse: Vec<u8>,
    two_sided: bool,
}

impl RightLoop {
    /// Validates a raw table whose identity element is `identity`. When the
    /// identity is not id 0 the ids of `identity` and 0 are swapped, labels
    /// travelling with their elements.
    pub fn validate_table(raw: &[Vec<usize>], identity: usize, labels: Vec<String>) -> Result<Self> {
        let n = raw.len();
        if n == 0 || n > MAX_DEGREE {
            return Err(Error::Precondition(format!("table order {n} out of range 1..={MAX_DEGREE}")));
        }
        let labels = if labels.is_empty() {
            default_labels(n)
        } else {
            labels
        };
        if labels.len() != n {
            return Err(Error::Precondition(format!("{} labels for order {n}", labels.len())));
        }
        for (r, row) in raw.iter().enumerate() {
            if row.len() != n {
                return Err(Error::NotSquare {
                    row: r,
                    expected: n,
                    found: row.len(),
                });
            }
            if let Some(c) = row.iter().position(|&v| v >= n) {
                return Err(Error::EntryOutOfRange { row: r, col: c });
            }
        }
        if identity >= n {
            return Err(Error::Precondition(format!("identity id {identity} out of range")));
        }
        let swap = |x: usize| {
            if x == identity {
                0
            } else if x == 0 {
                identity
            } else {
                x
            }
        };
        let mut op = vec![0u8; n * n];
        for x in 0..n {
            for y in 0..n {
                op[swap(x) * n + swap(y)] = swap(raw[x][y]) as u8;
            }
        }
        let mut labels = labels;
        labels.swap(0, identity);
        Self::from_flat(n, op, labels)
    }

    /// Table from a function on ids, identity 0, labels `0..n`.
    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> usize) -> Result<Self> {
        let raw: Vec<Vec<usize>> = (0..n).map(|x| (0..n).map(|y| f(x, y)).collect()).collect();
        Self::validate_table(&raw, 0, Vec::new())
    }

    /// Validates a row-major table over `u8` ids with identity 0.
    pub(crate) fn from_flat(n: usize, op: Vec<u8>, labels: Vec<String>) -> Result<Self> {
        let at = |x: usize, y: usize| op[x * n + y] as usize;
        for x in 0..n {
            for (r, c) in [(0, x), (x, 0)] {
                if at(r, c) != x {
                    return Err(Error::IdentityAxiom {
                        row: labels[r].clone(),
                        col: labels[c].clone(),
                        found: labels[at(r, c)].clone(),
                    });
                }
            }
        }
        let mut rdiv = vec![0u8; n * n];
        for a in 0..n {
            let mut seen = vec![false; n];
            for s in 0..n {
                let b = at(s, a);
                if std::mem::replace(&mut seen[b], true) {
                    return Err(Error::ColumnNotBijective(labels[a].clone()));
                }
                rdiv[a * n + b] = s as u8;
            }
        }
        let left_inverse: Vec<u8> = (0..n).map(|x| rdiv[x * n]).collect();
        let two_sided = (0..n).all(|x| at(x, left_inverse[x] as usize) == 0);
        Ok(RightLoop {
            n,
            op,
            rdiv,
            labels,
            left_inverse,
            two_sided,
        })
    }

    /// The group table viewed as a right loop.
    pub fn from_group(gt: &GroupTable) -> Result<Self> {
        Self::validate_table(&gt.rows(), gt.identity(), gt.labels().to_vec())
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.n {
            return Err(Error::Precondition(format!("{} labels for order {}", labels.len(), self.n)));
        }
        self.labels = labels;
        Ok(self)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn op(&self, x: usize, y: usize) -> usize {
        self.op[x * self.n + y] as usize
    }

    /// The unique `s` with `s ∘ a = b`.
    #[inline]
    pub fn right_divide(&self, b: usize, a: usize) -> usize {
        self.rdiv[a * self.n + b] as usize
    }

    /// The unique `x'` with `x' ∘ x = e`.
    #[inline]
    pub fn left_inverse(&self, x: usize) -> usize {
        self.left_inverse[x] as usize
    }

    /// Two-sided inverse, when every element has one.
    pub fn inverse(&self, x: usize) -> Option<usize> {
        self.two_sided.then(|| self.left_inverse(x))
    }

    pub fn has_unique_inverses(&self) -> bool {
        self.two_sided
    }

    pub fn two_sided_inverses(&self) -> Option<Vec<usize>> {
        self.two_sided.then(|| (0..self.n).map(|x| self.left_inverse(x)).collect())
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn id_of(&self, label: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    /// Row-major flat table.
    pub fn flat(&self) -> &[u8] {
        &self.op
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        (0..self.n).map(|x| (0..self.n).map(|y| self.op(x, y)).collect()).collect()
    }

    /// Same operation on the same ids; labels are ignored.
    pub fn same_table(&self, other: &RightLoop) -> bool {
        self.op == other.op
    }

    /// Whether every row map `y ↦ x ∘ y` is also bijective.
    pub fn is_loop(&self) -> bool {
        (0..self.n).all(|x| {
            let mut seen = vec![false; self.n];
            (0..self.n).all(|y| !std::mem::replace(&mut seen[self.op(x, y)], true))
        })
    }

    pub fn is_associative(&self) -> bool {
        let n = self.n;
        (0..n).all(|x| {
            (0..n).all(|y| {
                let xy = self.op(x, y);
                (0..n).all(|z| self.op(xy, z) == self.op(x, self.op(y, z)))
            })
        })
    }

    /// `(a ∘ b)' = a' ∘ b'` for all `a, b`.
    pub fn has_aip(&self) -> Result<bool> {
        if !self.two_sided {
            return Err(Error::NoUniqueInverses);
        }
        let inv = |x| self.left_inverse(x);
        Ok((0..self.n).all(|a| {
            (0..self.n).all(|b| inv(self.op(a, b)) == self.op(inv(a), inv(b)))
        }))
    }

    /// `(a ∘ a) ∘ b = a ∘ (a ∘ b)` for all `a, b`.
    pub fn has_left_alternative(&self) -> bool {
        (0..self.n).all(|a| {
            let aa = self.op(a, a);
            (0..self.n).all(|b| self.op(aa, b) == self.op(a, self.op(a, b)))
        })
    }

    /// `R_a : x ↦ x ∘ a`.
    pub fn right_translation(&self, a: usize) -> Perm {
        Perm::from_fn_unchecked(self.n, |x| self.op(x, a))
    }

    /// The table transported along a relabelling `p` of ids fixing 0:
    /// `p(x) ∘' p(y) = p(x ∘ y)`. Labels stay attached to positions.
    pub fn transport(&self, p: &Perm) -> Result<RightLoop> {
        if p.degree() != self.n {
            return Err(Error::DegreeMismatch(p.degree(), self.n));
        }
        if !p.fixes(0) {
            return Err(Error::MovesIdentity(p.to_string()));
        }
        let mut op = vec![0u8; self.n * self.n];
        for x in 0..self.n {
            for y in 0..self.n {
                op[p.apply(x) * self.n + p.apply(y)] = p.apply(self.op(x, y)) as u8;
            }
        }
        Self::from_flat(self.n, op, self.labels.clone())
    }
}

pub(crate) fn default_labels(n: usize) -> Vec<String> {
    (0..n).map(|i| i.to_string()).collect()
}
