use std::collections::{BTreeMap, HashMap, HashSet};

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::permgroup::{GroupTable, Perm};

/// A permutation group held as its full element list.
///
/// Elements are sorted lexicographically by image array, so the identity is
/// always at index 0.
#[derive(Debug, Clone)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Perm>,
    elements: Vec<Perm>,
    index: HashMap<Perm, usize>,
}

impl PermGroup {
    pub fn trivial(degree: usize) -> Self {
        Self::from_sorted(degree, Vec::new(), vec![Perm::identity(degree)])
    }

    /// Closure of `generators` with the default element cap.
    pub fn close(degree: usize, generators: &[Perm]) -> Result<Self> {
        Self::close_with_cap(degree, generators, Limits::default().perm_closure)
    }

    /// Breadth-first closure under right multiplication by generators.
    pub fn close_with_cap(degree: usize, generators: &[Perm], cap: usize) -> Result<Self> {
        if let Some(g) = generators.iter().find(|g| g.degree() != degree) {
            return Err(Error::DegreeMismatch(degree, g.degree()));
        }
        let mut seen: HashSet<Perm> = HashSet::new();
        let id = Perm::identity(degree);
        seen.insert(id.clone());
        let mut frontier = vec![id];
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for g in &frontier {
                for s in generators {
                    let h = g.then(s);
                    if !seen.contains(&h) {
                        if seen.len() >= cap {
                            return Err(Error::cap("permutation closure", cap, seen.len() + 1));
                        }
                        seen.insert(h.clone());
                        next.push(h);
                    }
                }
            }
            frontier = next;
        }
        let mut elements: Vec<Perm> = seen.into_iter().collect();
        elements.sort();
        Ok(Self::from_sorted(degree, generators.to_vec(), elements))
    }

    /// Wraps a set claimed to be a group. Closure is verified while a
    /// greedy generating set is grown inside the set; a finite nonempty set
    /// closed under products is a group.
    pub fn from_closed_set(degree: usize, mut elements: Vec<Perm>) -> Result<Self> {
        elements.sort();
        elements.dedup();
        if elements.iter().any(|p| p.degree() != degree) {
            return Err(Error::NotAGroup("mixed degrees".into()));
        }
        if elements.first().is_none_or(|p| !p.is_identity()) {
            return Err(Error::NotAGroup("identity missing".into()));
        }
        let generators = greedy_generators(degree, &elements)?;
        Ok(Self::from_sorted(degree, generators, elements))
    }

    fn from_sorted(degree: usize, generators: Vec<Perm>, elements: Vec<Perm>) -> Self {
        let index = elements
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();
        PermGroup {
            degree,
            generators,
            elements,
            index,
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Perm {
        &self.elements[i]
    }

    pub fn contains(&self, p: &Perm) -> bool {
        self.index.contains_key(p)
    }

    pub fn index_of(&self, p: &Perm) -> Option<usize> {
        self.index.get(p).copied()
    }

    /// Row-major multiplication table over element indices.
    pub fn mul_table(&self) -> Vec<u32> {
        let m = self.order();
        let mut out = Vec::with_capacity(m * m);
        for a in &self.elements {
            for b in &self.elements {
                out.push(self.index[&a.then(b)] as u32);
            }
        }
        out
    }

    pub fn is_abelian(&self) -> bool {
        // The stored generators always generate the group.
        self.generators
            .iter()
            .all(|a| self.generators.iter().all(|b| a.then(b) == b.then(a)))
    }

    /// Orbit of `x` under the group.
    pub fn orbit(&self, x: usize) -> Vec<usize> {
        let mut seen = vec![false; self.degree];
        for g in &self.elements {
            seen[g.apply(x)] = true;
        }
        (0..self.degree).filter(|&y| seen[y]).collect()
    }

    /// Whether the orbit of a member of `points` is exactly `points`.
    pub fn is_transitive_on(&self, points: &[usize]) -> bool {
        let Some(&first) = points.first() else {
            return false;
        };
        let mut want: Vec<usize> = points.to_vec();
        want.sort_unstable();
        want.dedup();
        self.orbit(first) == want
    }

    pub fn involutions(&self) -> Vec<Perm> {
        self.elements
            .iter()
            .filter(|p| !p.is_identity() && p.then(p).is_identity())
            .cloned()
            .collect()
    }

    pub fn centralizer(&self, p: &Perm) -> Result<PermGroup> {
        if !self.contains(p) {
            return Err(Error::NotInGroup(p.to_string()));
        }
        let elements: Vec<Perm> = self
            .elements
            .iter()
            .filter(|q| q.then(p) == p.then(q))
            .cloned()
            .collect();
        let generators = greedy_generators(self.degree, &elements)?;
        Ok(Self::from_sorted(self.degree, generators, elements))
    }

    /// Element order → number of elements with that order.
    pub fn order_profile(&self) -> BTreeMap<usize, usize> {
        let mut out = BTreeMap::new();
        for p in &self.elements {
            *out.entry(p.order()).or_insert(0) += 1;
        }
        out
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.elements.iter().all(|p| other.contains(p))
    }

    /// Elements common to both groups, as a group.
    pub fn intersection(&self, other: &PermGroup) -> PermGroup {
        let elements: Vec<Perm> = self
            .elements
            .iter()
            .filter(|p| other.contains(p))
            .cloned()
            .collect();
        let generators =
            greedy_generators(self.degree, &elements).expect("intersection of groups is a group");
        Self::from_sorted(self.degree, generators, elements)
    }

    /// Abstract multiplication table; element labels are compact cycle strings.
    pub fn to_table(&self, point_labels: &[String]) -> GroupTable {
        let labels = self
            .elements
            .iter()
            .map(|p| p.to_compact_string(point_labels))
            .collect();
        GroupTable::from_trusted(self.order(), self.mul_table(), labels)
    }
}

/// Greedy generating set for a sorted element list. Fails if a product of
/// members leaves the list.
fn greedy_generators(degree: usize, elements: &[Perm]) -> Result<Vec<Perm>> {
    let members: HashSet<&Perm> = elements.iter().collect();
    let mut gens: Vec<Perm> = Vec::new();
    let mut span: HashSet<Perm> = HashSet::from([Perm::identity(degree)]);
    // Higher-order elements first keeps the set short.
    let mut by_order: Vec<&Perm> = elements.iter().collect();
    by_order.sort_by_key(|p| std::cmp::Reverse(p.order()));
    for p in by_order {
        if span.len() == elements.len() {
            break;
        }
        if span.contains(p) {
            continue;
        }
        gens.push(p.clone());
        let mut frontier: Vec<Perm> = span.iter().cloned().collect();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for g in &frontier {
                for s in &gens {
                    let h = g.then(s);
                    if !members.contains(&h) {
                        return Err(Error::NotAGroup(format!("{g} * {s} = {h} not in set")));
                    }
                    if span.insert(h.clone()) {
                        next.push(h);
                    }
                }
            }
            frontier = next;
        }
    }
    Ok(gens)
}
