use std::collections::{HashSet, VecDeque};
use std::sync::OnceLock;

use num_bigint::BigUint;

use super::{Permutation, StabChain};
use crate::error::{Error, Result};

/// Default bound on the number of elements materialized by enumeration.
pub const DEFAULT_ELEMENT_CAP: u64 = 10_000_000;

/// Orbits of a group on its domain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitPartition {
    /// Class index of every point.
    pub class_of: Vec<usize>,
    /// Smallest point of each class; classes are numbered in this order.
    pub representatives: Vec<usize>,
    pub sizes: Vec<usize>,
}

impl OrbitPartition {
    pub fn len(&self) -> usize {
        self.representatives.len()
    }

    pub fn is_empty(&self) -> bool {
        self.representatives.is_empty()
    }

    pub fn class(&self, c: usize) -> Vec<usize> {
        (0..self.class_of.len()).filter(|&x| self.class_of[x] == c).collect()
    }
}

/// A permutation group given by generators, with a lazily built
/// stabilizer chain.
#[derive(Debug, Clone)]
pub struct PermGroup {
    degree: usize,
    gens: Vec<Permutation>,
    chain: OnceLock<StabChain>,
}

impl PermGroup {
    pub fn new(degree: usize, gens: Vec<Permutation>) -> Result<Self> {
        if let Some(g) = gens.iter().find(|g| g.degree() != degree) {
            return Err(Error::DegreeMismatch { expected: degree, got: g.degree() });
        }
        Ok(PermGroup { degree, gens, chain: OnceLock::new() })
    }

    pub fn trivial(degree: usize) -> Self {
        PermGroup { degree, gens: Vec::new(), chain: OnceLock::new() }
    }

    /// `S_n` on `0..n`, generated by an `n`-cycle and a transposition.
    pub fn symmetric(n: usize) -> Self {
        if n < 2 {
            return PermGroup::trivial(n);
        }
        let cyc: Vec<usize> = (0..n).collect();
        let gens = vec![
            Permutation::from_cycles(n, &[&cyc]).unwrap(),
            Permutation::from_cycles(n, &[&[0, 1]]).unwrap(),
        ];
        PermGroup::new(n, gens).unwrap()
    }

    /// `A_n` on `0..n`, generated by the 3-cycles `(0 1 i)`.
    pub fn alternating(n: usize) -> Self {
        let gens = (2..n).map(|i| Permutation::from_cycles(n, &[&[0, 1, i]]).unwrap()).collect();
        PermGroup::new(n, gens).unwrap()
    }

    pub(crate) fn from_chain(chain: StabChain, gens: Vec<Permutation>) -> Self {
        let degree = chain.degree();
        let cell = OnceLock::new();
        let _ = cell.set(chain);
        PermGroup { degree, gens, chain: cell }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.gens
    }

    /// The stabilizer chain (built on first use with the default base).
    pub fn chain(&self) -> &StabChain {
        self.chain.get_or_init(|| StabChain::new(self.degree, &self.gens, &[], None))
    }

    pub fn order(&self) -> BigUint {
        self.chain().order()
    }

    /// Order as `u64`; all groups in scope fit.
    pub fn order_u64(&self) -> u64 {
        u64::try_from(self.order()).expect("group order exceeds u64")
    }

    /// Sifts `p`; returns the membership verdict and the residue.
    pub fn sift(&self, p: &Permutation) -> Result<(bool, Permutation)> {
        self.check_degree(p)?;
        let chain = self.chain();
        let (residue, level) = chain.sift_from(p.clone(), 0);
        Ok((level == chain.depth() && residue.is_identity(), residue))
    }

    pub fn contains(&self, p: &Permutation) -> Result<bool> {
        self.check_degree(p)?;
        Ok(self.chain().contains(p))
    }

    /// True if every generator of `other` lies in `self`.
    pub fn contains_group(&self, other: &PermGroup) -> Result<bool> {
        for g in other.generators() {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Equality as sets of permutations.
    pub fn same_elements(&self, other: &PermGroup) -> Result<bool> {
        Ok(self.order() == other.order() && self.contains_group(other)?)
    }

    fn check_degree(&self, p: &Permutation) -> Result<()> {
        if p.degree() != self.degree {
            return Err(Error::DegreeMismatch { expected: self.degree, got: p.degree() });
        }
        Ok(())
    }

    /// Orbit of `x` in breadth-first discovery order.
    pub fn orbit(&self, x: usize) -> Vec<usize> {
        let mut seen = vec![false; self.degree];
        let mut out = vec![x];
        seen[x] = true;
        let mut i = 0;
        while i < out.len() {
            let y = out[i];
            for g in &self.gens {
                let z = g.apply(y);
                if !seen[z] {
                    seen[z] = true;
                    out.push(z);
                }
            }
            i += 1;
        }
        out
    }

    pub fn orbits(&self) -> OrbitPartition {
        let mut class_of = vec![usize::MAX; self.degree];
        let mut representatives = Vec::new();
        let mut sizes = Vec::new();
        for x in 0..self.degree {
            if class_of[x] != usize::MAX {
                continue;
            }
            let c = representatives.len();
            let orbit = self.orbit(x);
            for &y in &orbit {
                class_of[y] = c;
            }
            representatives.push(x);
            sizes.push(orbit.len());
        }
        OrbitPartition { class_of, representatives, sizes }
    }

    pub fn is_transitive(&self) -> bool {
        self.degree == 0 || self.orbit(0).len() == self.degree
    }

    /// Point stabilizer `G_x`, returned with its chain. Built by rerunning
    /// Schreier–Sims with `x` as the first base point, stopping once the
    /// known order is reached.
    pub fn stabilizer(&self, x: usize) -> PermGroup {
        let order = self.order();
        let strong = self.chain().all_strong_generators();
        let chain = StabChain::new(self.degree, &strong, &[x], Some(&order));
        let gens = chain.strong_generators(1).to_vec();
        PermGroup::from_chain(chain.tail(), gens)
    }

    /// Sorted orbit sizes of `G_x` on the set `points`, which must be
    /// invariant under `G_x`.
    pub fn stabilizer_orbits_on(&self, x: usize, points: &[usize]) -> Result<Vec<usize>> {
        self.stabilizer(x).orbit_sizes_on(points)
    }

    /// Sorted orbit sizes of `self` on the invariant set `points`.
    pub fn orbit_sizes_on(&self, points: &[usize]) -> Result<Vec<usize>> {
        let mut inside = vec![false; self.degree];
        for &p in points {
            inside[p] = true;
        }
        let mut seen = vec![false; self.degree];
        let mut sizes = Vec::new();
        for &p in points {
            if seen[p] {
                continue;
            }
            seen[p] = true;
            let mut queue = VecDeque::from([p]);
            let mut size = 0;
            while let Some(y) = queue.pop_front() {
                size += 1;
                for g in &self.gens {
                    let z = g.apply(y);
                    if !inside[z] {
                        return Err(Error::NotInvariant(z));
                    }
                    if !seen[z] {
                        seen[z] = true;
                        queue.push_back(z);
                    }
                }
            }
            sizes.push(size);
        }
        sizes.sort_unstable();
        Ok(sizes)
    }

    /// Derived subgroup: normal closure of the generator commutators.
    pub fn derived_subgroup(&self) -> PermGroup {
        let mut gens: Vec<Permutation> = Vec::new();
        for (i, a) in self.gens.iter().enumerate() {
            for b in &self.gens[i + 1..] {
                let c = a.commutator(b);
                if !c.is_identity() {
                    gens.push(c);
                }
            }
        }
        let mut chain = StabChain::new(self.degree, &gens, &[], None);
        let mut kept: Vec<Permutation> = gens.into_iter().filter(|g| !g.is_identity()).collect();
        let mut i = 0;
        while i < kept.len() {
            let h = kept[i].clone();
            for g in &self.gens {
                let c = h.conjugate_by(g);
                if chain.extend(&c) {
                    kept.push(c);
                }
            }
            i += 1;
        }
        PermGroup::from_chain(chain, kept)
    }

    /// All elements, each exactly once, in chain order.
    pub fn enumerate_elements(&self, cap: u64) -> Result<Vec<Permutation>> {
        let order = self.order();
        if order > BigUint::from(cap) {
            return Err(Error::CapExceeded { cap, order: order.to_string() });
        }
        let chain = self.chain();
        let radix = chain.orbit_lengths();
        let mut digits = vec![0usize; radix.len()];
        let total = self.order_u64() as usize;
        let mut out = Vec::with_capacity(total);
        for _ in 0..total {
            out.push(chain.element_from_digits(&digits));
            for (d, &r) in digits.iter_mut().zip(&radix) {
                *d += 1;
                if *d < r {
                    break;
                }
                *d = 0;
            }
        }
        Ok(out)
    }

    /// The three index-2 subgroups containing the derived subgroup, when the
    /// abelianization is the Klein four-group. Cosets of `G'` are found by
    /// enumerating the elements of `G` and sifting against `G'`.
    pub fn index2_subgroups_over_derived(&self) -> Result<Vec<PermGroup>> {
        let derived = self.derived_subgroup();
        let (q, r) = (self.order() / derived.order(), self.order() % derived.order());
        if q != BigUint::from(4u32) || r != BigUint::from(0u32) {
            return Err(Error::BadQuotient(q.to_string()));
        }
        for g in &self.gens {
            if !derived.contains(&g.then(g))? {
                return Err(Error::BadQuotient("4 (cyclic)".into()));
            }
        }
        let mut reps = vec![Permutation::identity(self.degree)];
        for e in self.enumerate_elements(DEFAULT_ELEMENT_CAP)? {
            let mut new_coset = true;
            for r in &reps {
                if derived.contains(&e.then(&r.inverse()))? {
                    new_coset = false;
                    break;
                }
            }
            if new_coset {
                reps.push(e);
                if reps.len() == 4 {
                    break;
                }
            }
        }
        reps.iter()
            .skip(1)
            .map(|r| {
                let mut gens = derived.generators().to_vec();
                gens.push(r.clone());
                PermGroup::new(self.degree, gens)
            })
            .collect()
    }

    /// Orbit of an ordered tuple under the generators.
    pub fn tuple_orbit(&self, tuple: &[usize]) -> HashSet<Vec<usize>> {
        let mut seen: HashSet<Vec<usize>> = HashSet::from([tuple.to_vec()]);
        let mut queue = VecDeque::from([tuple.to_vec()]);
        while let Some(t) = queue.pop_front() {
            for g in &self.gens {
                let img = g.apply_tuple(&t);
                if !seen.contains(&img) {
                    seen.insert(img.clone());
                    queue.push_back(img);
                }
            }
        }
        seen
    }

    /// Whether the group is `k`-transitive on its whole domain: the orbit of
    /// `(0, 1, ..., k-1)` must contain all `n(n-1)...(n-k+1)` ordered tuples.
    pub fn is_k_transitive(&self, k: usize) -> Result<bool> {
        let all: Vec<usize> = (0..self.degree).collect();
        self.is_k_transitive_on(&all, k)
    }

    /// `k`-transitivity of the action induced on `block`, which must be a
    /// block of imprimitivity (or the whole domain): elements mapping a tuple
    /// of `block` back into `block` stabilize it.
    pub fn is_k_transitive_on(&self, block: &[usize], k: usize) -> Result<bool> {
        let n = block.len();
        if k > n {
            return Err(Error::TupleTooLong { k, n });
        }
        if k == 0 {
            return Ok(true);
        }
        let inside: HashSet<usize> = block.iter().copied().collect();
        let target: u64 = (0..k as u64).map(|i| n as u64 - i).product();
        let count = self
            .tuple_orbit(&block[..k])
            .iter()
            .filter(|t| t.iter().all(|x| inside.contains(x)))
            .count() as u64;
        Ok(count == target)
    }

    /// The action on an invariant point set, relabelled by position.
    pub fn restrict(&self, points: &[usize]) -> Result<PermGroup> {
        let gens = self.gens.iter().map(|g| g.restrict(points)).collect::<Result<Vec<_>>>()?;
        PermGroup::new(points.len(), gens)
    }
}
