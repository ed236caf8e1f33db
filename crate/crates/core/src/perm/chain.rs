//! Deterministic Schreier–Sims with explicit transversals.
//!
//! Level `l` stores the strong generators fixing the first `l` base points,
//! the orbit of the `l`-th base point under them, and for every orbit point
//! `beta` a transversal element `u` with `base^u = beta` (plus its inverse).
//! Each level remembers which (orbit point, generator) Schreier generators
//! have already been sifted, so completion after adding a generator only
//! examines new pairs.

use num_bigint::BigUint;

use super::Permutation;

#[derive(Debug, Clone)]
struct Level {
    base: usize,
    gens: Vec<Permutation>,
    orbit: Vec<usize>,
    transversal: Vec<Option<(Permutation, Permutation)>>,
    /// Per orbit index: how many generators have had their Schreier
    /// generator sifted.
    checked: Vec<usize>,
    scan_from: usize,
}

impl Level {
    fn new(base: usize, degree: usize) -> Self {
        let mut transversal = vec![None; degree];
        let id = Permutation::identity(degree);
        transversal[base] = Some((id.clone(), id));
        Level { base, gens: Vec::new(), orbit: vec![base], transversal, checked: vec![0], scan_from: 0 }
    }

    fn add_gen(&mut self, p: Permutation) {
        self.gens.push(p);
        self.scan_from = 0;
        let mut i = 0;
        while i < self.orbit.len() {
            let beta = self.orbit[i];
            for s in 0..self.gens.len() {
                let gamma = self.gens[s].apply(beta);
                if self.transversal[gamma].is_none() {
                    let u = self.transversal[beta].as_ref().unwrap().0.then(&self.gens[s]);
                    let inv = u.inverse();
                    self.transversal[gamma] = Some((u, inv));
                    self.orbit.push(gamma);
                    self.checked.push(0);
                }
            }
            i += 1;
        }
    }

    /// Next Schreier generator not yet examined, as (orbit point, generator index).
    fn next_unchecked(&mut self) -> Option<(usize, usize)> {
        while self.scan_from < self.orbit.len() {
            let a = self.scan_from;
            if self.checked[a] < self.gens.len() {
                let b = self.checked[a];
                self.checked[a] += 1;
                return Some((self.orbit[a], b));
            }
            self.scan_from += 1;
        }
        None
    }
}

/// Base and strong generating set of a permutation group.
#[derive(Debug, Clone)]
pub struct StabChain {
    degree: usize,
    levels: Vec<Level>,
}

impl StabChain {
    /// Builds a chain for `<gens>` whose base starts with `base_prefix`.
    /// Further base points are the smallest points moved by the element that
    /// needs them. When `known_order` is the true group order, completion
    /// stops as soon as the orbit lengths multiply to it.
    pub fn new(
        degree: usize,
        gens: &[Permutation],
        base_prefix: &[usize],
        known_order: Option<&BigUint>,
    ) -> Self {
        let mut chain = StabChain {
            degree,
            levels: base_prefix.iter().map(|&b| Level::new(b, degree)).collect(),
        };
        for g in gens.iter().filter(|g| !g.is_identity()) {
            let depth = match chain.levels.iter().position(|l| g.apply(l.base) != l.base) {
                Some(d) => d,
                None => {
                    let b = g.first_moved().unwrap();
                    chain.levels.push(Level::new(b, degree));
                    chain.levels.len() - 1
                }
            };
            for l in 0..=depth {
                chain.levels[l].add_gen(g.clone());
            }
        }
        chain.complete(known_order);
        chain
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base).collect()
    }

    pub fn depth(&self) -> usize {
        self.levels.len()
    }

    /// Fundamental orbit lengths, one per base point.
    pub fn orbit_lengths(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    pub fn order(&self) -> BigUint {
        self.levels.iter().fold(BigUint::from(1u32), |acc, l| acc * BigUint::from(l.orbit.len()))
    }

    /// Strong generators of the stabilizer of the first `level` base points.
    pub fn strong_generators(&self, level: usize) -> &[Permutation] {
        self.levels.get(level).map(|l| l.gens.as_slice()).unwrap_or(&[])
    }

    /// All strong generators (those of level 0 include every other level's).
    pub fn all_strong_generators(&self) -> Vec<Permutation> {
        let mut out: Vec<Permutation> = Vec::new();
        for l in &self.levels {
            for g in &l.gens {
                if !out.contains(g) {
                    out.push(g.clone());
                }
            }
        }
        out
    }

    /// Orbit of the `level`-th base point under the level's group, in
    /// discovery order.
    pub fn fundamental_orbit(&self, level: usize) -> &[usize] {
        &self.levels[level].orbit
    }

    /// Transversal element mapping the `level`-th base point to `point`.
    pub fn transversal(&self, level: usize, point: usize) -> Option<&Permutation> {
        self.levels[level].transversal[point].as_ref().map(|(u, _)| u)
    }

    /// Chain of the stabilizer of the first base point.
    pub fn tail(&self) -> StabChain {
        StabChain { degree: self.degree, levels: self.levels.iter().skip(1).cloned().collect() }
    }

    /// Sifts `g` through levels `start..`; returns the residue and the level
    /// at which sifting stopped (`depth()` if it went all the way through).
    pub fn sift_from(&self, mut g: Permutation, start: usize) -> (Permutation, usize) {
        for (l, level) in self.levels.iter().enumerate().skip(start) {
            let beta = g.apply(level.base);
            match &level.transversal[beta] {
                None => return (g, l),
                Some((_, inv)) => g = g.then(inv),
            }
        }
        (g, self.levels.len())
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        let (residue, level) = self.sift_from(g.clone(), 0);
        level == self.levels.len() && residue.is_identity()
    }

    /// Adds a generator and restores completeness. Returns false if `g` was
    /// already a member.
    pub fn extend(&mut self, g: &Permutation) -> bool {
        let (y, j) = self.sift_from(g.clone(), 0);
        if j == self.levels.len() && y.is_identity() {
            return false;
        }
        if j == self.levels.len() {
            self.levels.push(Level::new(y.first_moved().unwrap(), self.degree));
        }
        for l in 0..=j {
            self.levels[l].add_gen(y.clone());
        }
        self.complete(None);
        true
    }

    fn complete(&mut self, known_order: Option<&BigUint>) {
        if self.levels.is_empty() || known_order.is_some_and(|k| self.order() == *k) {
            return;
        }
        let mut i = self.levels.len() - 1;
        loop {
            let Some((beta, s)) = self.levels[i].next_unchecked() else {
                if i == 0 {
                    return;
                }
                i -= 1;
                continue;
            };
            let level = &self.levels[i];
            let gen = &level.gens[s];
            let gamma = gen.apply(beta);
            let h = level.transversal[beta].as_ref().unwrap().0.then(gen).then(&level.transversal[gamma].as_ref().unwrap().1);
            if h.is_identity() {
                continue;
            }
            let (y, j) = self.sift_from(h, i + 1);
            if j == self.levels.len() {
                if y.is_identity() {
                    continue;
                }
                self.levels.push(Level::new(y.first_moved().unwrap(), self.degree));
            }
            for l in i + 1..=j {
                self.levels[l].add_gen(y.clone());
            }
            if known_order.is_some_and(|k| self.order() == *k) {
                return;
            }
            i = j;
        }
    }

    /// Mixed-radix element enumeration: element number `idx` is
    /// `u_k * ... * u_1` with digit `l` selecting the transversal element at
    /// level `l` (level 0 least significant).
    pub(crate) fn element_from_digits(&self, digits: &[usize]) -> Permutation {
        let mut g = Permutation::identity(self.degree);
        for (l, level) in self.levels.iter().enumerate().rev() {
            let beta = level.orbit[digits[l]];
            g = g.then(&level.transversal[beta].as_ref().unwrap().0);
        }
        g
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sym(n: usize) -> Vec<Permutation> {
        let cyc: Vec<usize> = (0..n).collect();
        vec![
            Permutation::from_cycles(n, &[&cyc]).unwrap(),
            Permutation::from_cycles(n, &[&[0, 1]]).unwrap(),
        ]
    }

    #[test]
    fn symmetric_group_orders() {
        for n in 2..8 {
            let chain = StabChain::new(n, &sym(n), &[], None);
            let fact: u64 = (1..=n as u64).product();
            assert_eq!(chain.order(), BigUint::from(fact));
        }
    }

    #[test]
    fn base_prefix_is_respected() {
        let chain = StabChain::new(5, &sym(5), &[3, 1], None);
        assert_eq!(&chain.base()[..2], &[3, 1]);
        assert_eq!(chain.order(), BigUint::from(120u32));
        assert_eq!(chain.tail().order(), BigUint::from(24u32));
        for g in chain.strong_generators(1) {
            assert_eq!(g.apply(3), 3);
        }
    }

    #[test]
    fn membership() {
        let a5 = [
            Permutation::from_cycles(5, &[&[0, 1, 2, 3, 4]]).unwrap(),
            Permutation::from_cycles(5, &[&[0, 1, 2]]).unwrap(),
        ];
        let chain = StabChain::new(5, &a5, &[], None);
        assert_eq!(chain.order(), BigUint::from(60u32));
        assert!(!chain.contains(&Permutation::from_cycles(5, &[&[0, 1]]).unwrap()));
        assert!(chain.contains(&Permutation::from_cycles(5, &[&[0, 1], &[2, 3]]).unwrap()));
    }

    #[test]
    fn extend_grows_group() {
        let mut chain = StabChain::new(4, &[Permutation::from_cycles(4, &[&[0, 1], &[2, 3]]).unwrap()], &[], None);
        assert_eq!(chain.order(), BigUint::from(2u32));
        assert!(chain.extend(&Permutation::from_cycles(4, &[&[0, 1, 2, 3]]).unwrap()));
        assert_eq!(chain.order(), BigUint::from(8u32));
        assert!(!chain.extend(&Permutation::from_cycles(4, &[&[0, 2]]).unwrap()));
    }

    #[test]
    fn trivial_group() {
        let chain = StabChain::new(3, &[Permutation::identity(3)], &[], None);
        assert_eq!(chain.depth(), 0);
        assert_eq!(chain.order(), BigUint::from(1u32));
        assert!(chain.contains(&Permutation::identity(3)));
    }
}
