use std::collections::{HashMap, VecDeque};

use rayon::prelude::*;

use super::{commutator, GroupElement, GroupError};

pub const DEFAULT_GROUP_CAP: usize = 200_000;

/// Groups up to this order get a full multiplication table.
const TABLE_LIMIT: usize = 2048;

/// Full closure of `gens`, breadth-first from the identity, right-multiplying
/// by the generators in the order given.
pub fn generate_elements<E: GroupElement>(gens: &[E], cap: usize) -> Result<Vec<E>, GroupError> {
    let first = gens.first().ok_or(GroupError::NoGenerators)?;
    let identity = first.identity_like();
    let mut seen: HashMap<E, usize> = HashMap::new();
    let mut elements = vec![identity.clone()];
    seen.insert(identity, 0);
    let mut head = 0;
    while head < elements.len() {
        let cur = elements[head].clone();
        head += 1;
        for g in gens {
            let next = cur.compose(g);
            if !seen.contains_key(&next) {
                if elements.len() >= cap {
                    return Err(GroupError::CapExceeded { cap });
                }
                seen.insert(next.clone(), elements.len());
                elements.push(next);
            }
        }
    }
    Ok(elements)
}

/// A fully enumerated group. Elements are addressed by their index in
/// generation order; index 0 is the identity.
#[derive(Clone, Debug)]
pub struct FiniteGroup<E: GroupElement> {
    elements: Vec<E>,
    index: HashMap<E, usize>,
    gens: Vec<usize>,
    inverses: Vec<usize>,
    /// Position of each element in the canonical order.
    rank: Vec<usize>,
    table: Option<Vec<u32>>,
}

/// A subgroup of a [`FiniteGroup`], stored as a sorted index set together
/// with a generating set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subgroup {
    members: Vec<usize>,
    mask: Vec<bool>,
    gens: Vec<usize>,
}

impl Subgroup {
    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn generators(&self) -> &[usize] {
        &self.gens
    }

    pub fn contains(&self, i: usize) -> bool {
        self.mask.get(i).copied().unwrap_or(false)
    }

    pub fn is_trivial(&self) -> bool {
        self.members.len() == 1
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.members.len() <= other.members.len() && self.members.iter().all(|&i| other.contains(i))
    }

    pub fn mask(&self) -> &[bool] {
        &self.mask
    }
}

impl<E: GroupElement> FiniteGroup<E> {
    pub fn generate(gens: &[E], cap: usize) -> Result<Self, GroupError> {
        let elements = generate_elements(gens, cap)?;
        Ok(Self::from_elements(elements, gens))
    }

    /// Build from an already closed element list whose first entry is the
    /// identity.
    fn from_elements(elements: Vec<E>, gens: &[E]) -> Self {
        let n = elements.len();
        let index: HashMap<E, usize> = elements
            .iter()
            .enumerate()
            .map(|(i, e)| (e.clone(), i))
            .collect();
        let mut gen_idx: Vec<usize> = Vec::new();
        for g in gens {
            let i = index[g];
            if i != 0 && !gen_idx.contains(&i) {
                gen_idx.push(i);
            }
        }
        let inverses: Vec<usize> = elements.par_iter().map(|e| index[&e.inverse()]).collect();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| elements[a].cmp(&elements[b]));
        let mut rank = vec![0; n];
        for (r, &i) in order.iter().enumerate() {
            rank[i] = r;
        }
        let table = (n <= TABLE_LIMIT).then(|| {
            let rows: Vec<Vec<u32>> = (0..n)
                .into_par_iter()
                .map(|i| {
                    (0..n)
                        .map(|j| index[&elements[i].compose(&elements[j])] as u32)
                        .collect()
                })
                .collect();
            rows.concat()
        });
        FiniteGroup {
            elements,
            index,
            gens: gen_idx,
            inverses,
            rank,
            table,
        }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[E] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &E {
        &self.elements[i]
    }

    pub fn index_of(&self, e: &E) -> Option<usize> {
        self.index.get(e).copied()
    }

    pub fn require(&self, e: &E) -> Result<usize, GroupError> {
        self.index_of(e).ok_or(GroupError::NotMember)
    }

    /// Nontrivial generators as indices.
    pub fn generators(&self) -> &[usize] {
        &self.gens
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        match &self.table {
            Some(t) => t[a * self.elements.len() + b] as usize,
            None => self.index[&self.elements[a].compose(&self.elements[b])],
        }
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    /// a^g = g^-1 a g.
    pub fn conj(&self, a: usize, g: usize) -> usize {
        self.mul(self.mul(self.inv(g), a), g)
    }

    pub fn commutator(&self, a: usize, b: usize) -> usize {
        match &self.table {
            Some(_) => self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b)),
            None => self.index[&commutator(&self.elements[a], &self.elements[b])],
        }
    }

    pub fn commute(&self, a: usize, b: usize) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    pub fn pow(&self, a: usize, n: u64) -> usize {
        let mut acc = 0;
        for _ in 0..n {
            acc = self.mul(acc, a);
        }
        acc
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut cur = a;
        let mut n = 1;
        while cur != 0 {
            cur = self.mul(cur, a);
            n += 1;
        }
        n
    }

    /// Position of element `i` in the canonical (`Ord`) order.
    pub fn canonical_rank(&self, i: usize) -> usize {
        self.rank[i]
    }

    /// The canonically least element among `set`.
    pub fn least_canonical(&self, set: &[usize]) -> Option<usize> {
        set.iter().copied().min_by_key(|&i| self.rank[i])
    }

    pub fn is_abelian(&self) -> bool {
        self.gens
            .iter()
            .enumerate()
            .all(|(k, &a)| self.gens[k + 1..].iter().all(|&b| self.commute(a, b)))
    }

    pub fn whole(&self) -> Subgroup {
        let n = self.order();
        Subgroup {
            members: (0..n).collect(),
            mask: vec![true; n],
            gens: self.gens.clone(),
        }
    }

    pub fn trivial(&self) -> Subgroup {
        let mut mask = vec![false; self.order()];
        mask[0] = true;
        Subgroup {
            members: vec![0],
            mask,
            gens: Vec::new(),
        }
    }

    /// Closure of a set of elements given by index.
    pub fn closure(&self, gens: &[usize]) -> Subgroup {
        let n = self.order();
        let mut mask = vec![false; n];
        mask[0] = true;
        let mut members = vec![0];
        let mut kept = Vec::new();
        for &g in gens {
            if mask[g] {
                continue;
            }
            kept.push(g);
            // Extend the current subgroup by g: BFS over right multiples by
            // all kept generators, seeded with the existing members.
            let mut queue: VecDeque<usize> = members.iter().copied().collect();
            while let Some(cur) = queue.pop_front() {
                for &s in &kept {
                    let next = self.mul(cur, s);
                    if !mask[next] {
                        mask[next] = true;
                        members.push(next);
                        queue.push_back(next);
                    }
                }
            }
        }
        members.sort_unstable();
        Subgroup {
            members,
            mask,
            gens: kept,
        }
    }

    /// Turn a set known to be a subgroup into a [`Subgroup`], picking a
    /// generating set greedily.
    pub fn subgroup_from_mask(&self, mask: Vec<bool>) -> Subgroup {
        let candidates: Vec<usize> = (0..self.order()).filter(|&i| mask[i]).collect();
        let mut cur = self.trivial();
        let mut gens = Vec::new();
        for &g in &candidates {
            if !cur.contains(g) {
                gens.push(g);
                cur = self.closure(&gens);
            }
        }
        debug_assert_eq!(cur.members, candidates, "mask is not a subgroup");
        cur
    }

    pub fn subgroup_from_members(&self, members: &[usize]) -> Subgroup {
        let mut mask = vec![false; self.order()];
        for &i in members {
            mask[i] = true;
        }
        self.subgroup_from_mask(mask)
    }

    pub fn join(&self, a: &Subgroup, b: &Subgroup) -> Subgroup {
        let gens: Vec<usize> = a.gens.iter().chain(&b.gens).copied().collect();
        self.closure(&gens)
    }

    pub fn intersection(&self, a: &Subgroup, b: &Subgroup) -> Subgroup {
        let mask: Vec<bool> = a.mask.iter().zip(&b.mask).map(|(&x, &y)| x && y).collect();
        self.subgroup_from_mask(mask)
    }

    /// C_G(x).
    pub fn centralizer(&self, x: usize) -> Subgroup {
        let mask: Vec<bool> = (0..self.order())
            .into_par_iter()
            .map(|g| self.commute(g, x))
            .collect();
        self.subgroup_from_mask(mask)
    }

    /// Elements of `within` commuting with every element of `set`.
    pub fn centralizer_of_set(&self, set: &[usize], within: &Subgroup) -> Subgroup {
        let mask: Vec<bool> = (0..self.order())
            .into_par_iter()
            .map(|g| within.contains(g) && set.iter().all(|&s| self.commute(g, s)))
            .collect();
        self.subgroup_from_mask(mask)
    }

    pub fn center(&self) -> Subgroup {
        self.centralizer_of_set(&self.gens, &self.whole())
    }

    /// Smallest subgroup containing `set` that is normalised by `by`.
    pub fn normal_closure_in(&self, set: &[usize], by: &Subgroup) -> Subgroup {
        let mut h = self.closure(set);
        loop {
            let extra: Vec<usize> = h
                .gens
                .iter()
                .flat_map(|&a| by.gens.iter().map(move |&g| (a, g)))
                .map(|(a, g)| self.conj(a, g))
                .filter(|&c| !h.contains(c))
                .collect();
            if extra.is_empty() {
                return h;
            }
            let gens: Vec<usize> = h.gens.iter().copied().chain(extra).collect();
            h = self.closure(&gens);
        }
    }

    pub fn normal_closure(&self, set: &[usize]) -> Subgroup {
        self.normal_closure_in(set, &self.whole())
    }

    pub fn normalizer(&self, h: &Subgroup) -> Subgroup {
        let mask: Vec<bool> = (0..self.order())
            .into_par_iter()
            .map(|g| h.gens.iter().all(|&a| h.contains(self.conj(a, g))))
            .collect();
        self.subgroup_from_mask(mask)
    }

    /// Whether `h` is normalised by every element of `by`.
    pub fn is_normal_in(&self, h: &Subgroup, by: &Subgroup) -> bool {
        by.gens
            .iter()
            .all(|&g| h.gens.iter().all(|&a| h.contains(self.conj(a, g))))
    }

    pub fn is_normal(&self, h: &Subgroup) -> bool {
        self.is_normal_in(h, &self.whole())
    }

    /// The subgroup as a group in its own right.
    pub fn subgroup_group(&self, h: &Subgroup) -> FiniteGroup<E> {
        if h.gens.is_empty() {
            let id = self.elements[0].clone();
            return FiniteGroup::from_elements(vec![id], &[]);
        }
        let elements: Vec<E> = {
            let gens: Vec<E> = h.gens.iter().map(|&i| self.elements[i].clone()).collect();
            generate_elements(&gens, usize::MAX).expect("subgroup is within the parent")
        };
        let gens: Vec<E> = h.gens.iter().map(|&i| self.elements[i].clone()).collect();
        FiniteGroup::from_elements(elements, &gens)
    }

    /// Conjugacy classes as sorted index lists, ordered by least index.
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        let mut seen = vec![false; n];
        let mut classes = Vec::new();
        for x in 0..n {
            if seen[x] {
                continue;
            }
            let mut class = vec![x];
            seen[x] = true;
            let mut head = 0;
            while head < class.len() {
                let cur = class[head];
                head += 1;
                for &g in &self.gens {
                    let c = self.conj(cur, g);
                    if !seen[c] {
                        seen[c] = true;
                        class.push(c);
                    }
                }
            }
            class.sort_unstable();
            classes.push(class);
        }
        classes
    }

    /// [H, K] for subgroups normalised by each other's generators.
    pub fn commutator_subgroup(&self, h: &Subgroup, k: &Subgroup) -> Subgroup {
        let comms: Vec<usize> = h
            .gens
            .iter()
            .flat_map(|&a| k.gens.iter().map(move |&b| (a, b)))
            .map(|(a, b)| self.commutator(a, b))
            .filter(|&c| c != 0)
            .collect();
        let both = self.join(h, k);
        self.normal_closure_in(&comms, &both)
    }

    pub fn derived_series(&self) -> Vec<Subgroup> {
        let mut series = vec![self.whole()];
        loop {
            let last = series.last().unwrap();
            let next = self.commutator_subgroup(last, last);
            if next.order() == last.order() {
                return series;
            }
            series.push(next);
        }
    }

    pub fn lower_central_series(&self) -> Vec<Subgroup> {
        let whole = self.whole();
        let mut series = vec![whole.clone()];
        loop {
            let last = series.last().unwrap();
            let next = self.commutator_subgroup(last, &whole);
            if next.order() == last.order() {
                return series;
            }
            series.push(next);
        }
    }

    pub fn is_soluble(&self) -> bool {
        self.derived_series().last().unwrap().is_trivial()
    }

    pub fn is_nilpotent(&self) -> bool {
        self.lower_central_series().last().unwrap().is_trivial()
    }
}
