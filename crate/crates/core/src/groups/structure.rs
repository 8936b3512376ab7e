//! Sylow subgroups, p-cores, the Fitting subgroup, minimal normal
//! subgroups and quotients.

use crate::numtheory::{prime_divisors, valuation};

use super::{FiniteGroup, GroupElement, GroupError, Permutation, Subgroup, DEFAULT_GROUP_CAP};

/// G/N realised as the action of G on the left cosets of N.
#[derive(Clone, Debug)]
pub struct Quotient {
    /// The quotient as a permutation group on the cosets.
    pub group: FiniteGroup<Permutation>,
    /// Coset index of every element of G; cosets are numbered by their least
    /// canonical member.
    coset_of: Vec<usize>,
    /// Quotient element index for every coset.
    element_of_coset: Vec<usize>,
}

impl Quotient {
    /// Image of an element of G in the quotient group.
    pub fn project(&self, g: usize) -> usize {
        self.element_of_coset[self.coset_of[g]]
    }

    pub fn coset_of(&self, g: usize) -> usize {
        self.coset_of[g]
    }

    pub fn num_cosets(&self) -> usize {
        self.element_of_coset.len()
    }

    /// Full preimage in G of a subgroup of the quotient.
    pub fn preimage<E: GroupElement>(&self, parent: &FiniteGroup<E>, h: &Subgroup) -> Subgroup {
        let mask: Vec<bool> = (0..parent.order())
            .map(|g| h.contains(self.project(g)))
            .collect();
        parent.subgroup_from_mask(mask)
    }
}

impl<E: GroupElement> FiniteGroup<E> {
    /// A Sylow p-subgroup, grown greedily: while P is not of full p-power
    /// order, adjoin the first g in N(P) \ P with g^p in P.
    pub fn sylow_subgroup(&self, p: u64) -> Subgroup {
        let target = p.pow(valuation(self.order() as u64, p)) as usize;
        let mut sub = self.trivial();
        while sub.order() < target {
            let norm = self.normalizer(&sub);
            let g = norm
                .members()
                .iter()
                .copied()
                .find(|&g| !sub.contains(g) && sub.contains(self.pow(g, p)))
                .expect("a non-Sylow p-subgroup has p dividing [N(P):P]");
            let gens: Vec<usize> = sub.generators().iter().copied().chain([g]).collect();
            sub = self.closure(&gens);
        }
        sub
    }

    /// O_p(G): the elements of a Sylow p-subgroup all of whose conjugates
    /// stay inside it.
    pub fn p_core(&self, p: u64) -> Subgroup {
        let sylow = self.sylow_subgroup(p);
        let mut mask = sylow.mask().to_vec();
        loop {
            let next: Vec<bool> = (0..self.order())
                .map(|x| mask[x] && self.generators().iter().all(|&g| mask[self.conj(x, g)]))
                .collect();
            if next == mask {
                break;
            }
            mask = next;
        }
        self.subgroup_from_mask(mask)
    }

    /// F(G), the product of the p-cores.
    pub fn fitting_subgroup(&self) -> Subgroup {
        let mut gens = Vec::new();
        for p in prime_divisors(self.order() as u64) {
            gens.extend_from_slice(self.p_core(p).generators());
        }
        self.closure(&gens)
    }

    /// All minimal normal subgroups, ordered by their least canonical member
    /// among the nonidentity elements.
    pub fn minimal_normal_subgroups(&self) -> Vec<Subgroup> {
        let closures: Vec<Subgroup> = self
            .conjugacy_classes()
            .into_iter()
            .filter(|c| c[0] != 0)
            .map(|c| self.normal_closure(&c[..1]))
            .collect();
        let mut minimal: Vec<Subgroup> = Vec::new();
        for n in &closures {
            let has_smaller = closures
                .iter()
                .any(|m| m.order() < n.order() && m.is_subset_of(n));
            if !has_smaller && !minimal.iter().any(|m| m.members() == n.members()) {
                minimal.push(n.clone());
            }
        }
        minimal.sort_by_key(|n| {
            let nontrivial: Vec<usize> = n.members().iter().copied().filter(|&i| i != 0).collect();
            self.least_canonical(&nontrivial)
                .map(|i| self.canonical_rank(i))
        });
        minimal
    }

    /// G/N via the action on left cosets gN.
    pub fn quotient(&self, n: &Subgroup) -> Result<Quotient, GroupError> {
        if !self.is_normal(n) {
            return Err(GroupError::NotNormal);
        }
        let size = self.order();
        let mut by_rank: Vec<usize> = (0..size).collect();
        by_rank.sort_by_key(|&i| self.canonical_rank(i));
        let mut coset_of = vec![usize::MAX; size];
        let mut reps = Vec::new();
        for &g in &by_rank {
            if coset_of[g] != usize::MAX {
                continue;
            }
            let id = reps.len();
            reps.push(g);
            for &m in n.members() {
                coset_of[self.mul(g, m)] = id;
            }
        }
        let degree = reps.len();
        let action = |s: usize| -> Permutation {
            let images: Vec<u32> = reps
                .iter()
                .map(|&r| coset_of[self.mul(s, r)] as u32)
                .collect();
            Permutation::new(images).expect("left multiplication permutes cosets")
        };
        let gens: Vec<Permutation> = if self.generators().is_empty() {
            vec![Permutation::identity(degree)]
        } else {
            self.generators().iter().map(|&s| action(s)).collect()
        };
        let group = FiniteGroup::generate(&gens, DEFAULT_GROUP_CAP.max(degree))?;
        let home = coset_of[0];
        let mut element_of_coset = vec![usize::MAX; degree];
        for (qi, perm) in group.elements().iter().enumerate() {
            element_of_coset[perm.apply(home as u32) as usize] = qi;
        }
        Ok(Quotient {
            group,
            coset_of,
            element_of_coset,
        })
    }

    /// Whether every Sylow subgroup of `h` is cyclic or generalised
    /// quaternion.
    pub fn sylow_profile_cyclic_or_quaternion(&self, h: &Subgroup) -> bool {
        let sub = self.subgroup_group(h);
        prime_divisors(sub.order() as u64).into_iter().all(|p| {
            let s = sub.sylow_subgroup(p);
            let orders: Vec<usize> = s.members().iter().map(|&i| sub.element_order(i)).collect();
            let n = s.order();
            if orders.contains(&n) {
                return true;
            }
            p == 2
                && n >= 8
                && orders.iter().filter(|&&o| o == 2).count() == 1
                && orders.contains(&(n / 2))
        })
    }
}
