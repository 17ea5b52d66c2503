//! Finite groups given by multiplication tables or permutation generators,
//! their subgroups and conjugacy classes, and rational class functions with
//! induction and restriction.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};

use thiserror::Error;

use crate::scalar::Scalar;

/// Default upper bound on the order of a group closed from permutation generators.
pub const DEFAULT_MAX_ORDER: usize = 720;
/// Default upper bound on the order of groups whose subgroup lattice is enumerated.
pub const DEFAULT_SUBGROUP_BOUND: usize = 24;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("fingroup: multiplication table is not square (row {0})")]
    NotSquare(usize),
    #[error("fingroup: table entry {0} out of range")]
    EntryOutOfRange(usize),
    #[error("fingroup: multiplication is not associative on ({0}, {1}, {2})")]
    NotAssociative(usize, usize, usize),
    #[error("fingroup: no identity element")]
    NoIdentity,
    #[error("fingroup: element {0} has no inverse")]
    NoInverse(usize),
    #[error("fingroup: generator {0} is not a permutation of 0..{1}")]
    BadPermutation(usize, usize),
    #[error("fingroup: group order exceeds the bound {0}")]
    TooLarge(usize),
    #[error("fingroup: {0} is not a subgroup")]
    NotSubgroup(String),
    #[error("fingroup: subgroup is not contained in the target subgroup")]
    NotContained,
    #[error("fingroup: empty group description")]
    Empty,
}

/// How a group is described in input documents.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupSpec {
    /// Cayley table on `0..n`; `generators` defaults to every element.
    Table {
        table: Vec<Vec<usize>>,
        generators: Option<Vec<usize>>,
    },
    /// Permutations of `0..degree`, composed as functions (`(gh)(x) = g(h(x))`).
    Permutations { degree: usize, generators: Vec<Vec<usize>> },
}

/// A validated finite group on the element indices `0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    table: Vec<Vec<usize>>,
    identity: usize,
    inverse: Vec<usize>,
    generators: Vec<usize>,
    perms: Option<Vec<Vec<usize>>>,
}

pub fn build_group(spec: &GroupSpec, max_order: usize) -> Result<FiniteGroup, GroupError> {
    match spec {
        GroupSpec::Table { table, generators } => {
            let g = from_table(table.clone())?;
            let gens = match generators {
                Some(v) => {
                    if let Some(&bad) = v.iter().find(|&&x| x >= g.order()) {
                        return Err(GroupError::EntryOutOfRange(bad));
                    }
                    v.clone()
                }
                None => (0..g.order()).collect(),
            };
            if g.closure(&gens).len() != g.order() {
                return Err(GroupError::NotSubgroup("generators do not generate the table group".into()));
            }
            Ok(FiniteGroup { generators: gens, ..g })
        }
        GroupSpec::Permutations { degree, generators } => from_permutations(*degree, generators, max_order),
    }
}

fn from_table(table: Vec<Vec<usize>>) -> Result<FiniteGroup, GroupError> {
    let n = table.len();
    if n == 0 {
        return Err(GroupError::Empty);
    }
    for (i, row) in table.iter().enumerate() {
        if row.len() != n {
            return Err(GroupError::NotSquare(i));
        }
        if let Some(&x) = row.iter().find(|&&x| x >= n) {
            return Err(GroupError::EntryOutOfRange(x));
        }
    }
    for a in 0..n {
        for b in 0..n {
            let ab = table[a][b];
            for c in 0..n {
                if table[ab][c] != table[a][table[b][c]] {
                    return Err(GroupError::NotAssociative(a, b, c));
                }
            }
        }
    }
    let identity = (0..n)
        .find(|&e| (0..n).all(|x| table[e][x] == x && table[x][e] == x))
        .ok_or(GroupError::NoIdentity)?;
    let inverse = (0..n)
        .map(|x| {
            (0..n)
                .find(|&y| table[x][y] == identity && table[y][x] == identity)
                .ok_or(GroupError::NoInverse(x))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(FiniteGroup {
        table,
        identity,
        inverse,
        generators: Vec::new(),
        perms: None,
    })
}

fn compose(g: &[usize], h: &[usize]) -> Vec<usize> {
    h.iter().map(|&x| g[x]).collect()
}

fn is_permutation(p: &[usize], degree: usize) -> bool {
    let mut seen = vec![false; degree];
    p.len() == degree && p.iter().all(|&x| x < degree && !std::mem::replace(&mut seen[x], true))
}

fn from_permutations(degree: usize, generators: &[Vec<usize>], max_order: usize) -> Result<FiniteGroup, GroupError> {
    for (i, g) in generators.iter().enumerate() {
        if !is_permutation(g, degree) {
            return Err(GroupError::BadPermutation(i, degree));
        }
    }
    let id: Vec<usize> = (0..degree).collect();
    let mut seen: HashSet<Vec<usize>> = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(p) = queue.pop_front() {
        for g in generators {
            let q = compose(g, &p);
            if seen.insert(q.clone()) {
                if seen.len() > max_order {
                    return Err(GroupError::TooLarge(max_order));
                }
                queue.push_back(q);
            }
        }
    }
    let mut elements: Vec<Vec<usize>> = seen.into_iter().collect();
    elements.sort();
    let index: HashMap<Vec<usize>, usize> = elements.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    let table: Vec<Vec<usize>> = elements
        .iter()
        .map(|a| elements.iter().map(|b| index[&compose(a, b)]).collect())
        .collect();
    let g = from_table(table)?;
    let gens = generators.iter().map(|p| index[p]).collect();
    Ok(FiniteGroup {
        generators: gens,
        perms: Some(elements),
        ..g
    })
}

impl FiniteGroup {
    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    /// `s t s⁻¹`.
    pub fn conj(&self, s: usize, t: usize) -> usize {
        self.mul(self.mul(s, t), self.inv(s))
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order()
    }

    /// Generators used to extend actions given per generator.
    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    /// The permutation realising an element, for permutation-defined groups.
    pub fn permutation(&self, g: usize) -> Option<&[usize]> {
        self.perms.as_ref().map(|p| p[g].as_slice())
    }

    pub fn element_order(&self, g: usize) -> usize {
        let mut x = g;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, g);
            k += 1;
        }
        k
    }

    /// Least common multiple of element orders.
    pub fn exponent(&self) -> usize {
        self.elements().map(|g| self.element_order(g)).fold(1, lcm)
    }

    pub fn is_abelian(&self) -> bool {
        self.elements().all(|a| self.elements().all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Subgroup generated by a set of elements.
    pub fn closure(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = BTreeSet::from([self.identity]);
        let mut queue = VecDeque::from([self.identity]);
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.mul(x, g);
                if seen.insert(y) {
                    queue.push_back(y);
                }
            }
        }
        seen.into_iter().collect()
    }

    pub fn full_subgroup(&self) -> Subgroup {
        Subgroup {
            members: self.elements().collect(),
        }
    }

    pub fn trivial_subgroup(&self) -> Subgroup {
        Subgroup {
            members: vec![self.identity],
        }
    }

    pub fn cyclic_subgroup(&self, g: usize) -> Subgroup {
        Subgroup {
            members: self.closure(&[g]),
        }
    }

    /// Centralizer of an element.
    pub fn centralizer(&self, t: usize) -> Subgroup {
        Subgroup {
            members: self.elements().filter(|&s| self.mul(s, t) == self.mul(t, s)).collect(),
        }
    }

    /// Checks associativity, identity and inverses exhaustively.
    pub fn verify_axioms(&self) -> bool {
        from_table(self.table.clone()).map(|g| g.identity == self.identity).unwrap_or(false)
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

/// Cyclic group of order `n` acting on `0..n` by rotation.
pub fn cyclic(n: usize) -> FiniteGroup {
    let rot: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
    from_permutations(n, &[rot], usize::MAX).expect("cyclic group")
}

/// Dihedral group of order `2n` acting on the vertices of an `n`-gon.
pub fn dihedral(n: usize) -> FiniteGroup {
    let rot: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
    let refl: Vec<usize> = (0..n).map(|i| (n - i) % n).collect();
    from_permutations(n, &[rot, refl], usize::MAX).expect("dihedral group")
}

/// Symmetric group on `n` points.
pub fn symmetric(n: usize) -> FiniteGroup {
    let mut gens = Vec::new();
    if n >= 2 {
        let mut t: Vec<usize> = (0..n).collect();
        t.swap(0, 1);
        gens.push(t);
        gens.push((0..n).map(|i| (i + 1) % n).collect());
    }
    from_permutations(n, &gens, usize::MAX).expect("symmetric group")
}

/// Klein four-group acting on four points.
pub fn klein_four() -> FiniteGroup {
    from_permutations(4, &[vec![1, 0, 3, 2], vec![2, 3, 0, 1]], usize::MAX).expect("klein four")
}

/// Quaternion group of order 8 in its left regular representation.
pub fn quaternion() -> FiniteGroup {
    // elements ±1, ±i, ±j, ±k encoded as 0..8: 2m + s with m ∈ {1,i,j,k}, s the sign bit
    let unit_mul = |a: usize, b: usize| -> (usize, bool) {
        // returns (unit, negative)
        match (a, b) {
            (0, x) | (x, 0) => (x, false),
            (a, b) if a == b => (0, true),
            (1, 2) => (3, false),
            (2, 3) => (1, false),
            (3, 1) => (2, false),
            (2, 1) => (3, true),
            (3, 2) => (1, true),
            (1, 3) => (2, true),
            _ => unreachable!(),
        }
    };
    let mul = |x: usize, y: usize| {
        let (u, neg) = unit_mul(x / 2, y / 2);
        let sign = (x % 2) ^ (y % 2) ^ usize::from(neg);
        2 * u + sign
    };
    let left = |x: usize| -> Vec<usize> { (0..8).map(|y| mul(x, y)).collect() };
    from_permutations(8, &[left(2), left(4)], usize::MAX).expect("quaternion group")
}

pub fn trivial_group() -> FiniteGroup {
    from_permutations(1, &[], usize::MAX).expect("trivial group")
}

/// A subgroup, stored as its sorted member list.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subgroup {
    members: Vec<usize>,
}

impl Subgroup {
    pub fn new(group: &FiniteGroup, mut members: Vec<usize>) -> Result<Self, GroupError> {
        members.sort_unstable();
        members.dedup();
        if members.iter().any(|&m| m >= group.order()) {
            return Err(GroupError::NotSubgroup(format!("{members:?} has out-of-range elements")));
        }
        if members.binary_search(&group.identity()).is_err() {
            return Err(GroupError::NotSubgroup(format!("{members:?} lacks the identity")));
        }
        for &a in &members {
            if members.binary_search(&group.inv(a)).is_err() {
                return Err(GroupError::NotSubgroup(format!("{members:?} is not closed under inverses")));
            }
            for &b in &members {
                if members.binary_search(&group.mul(a, b)).is_err() {
                    return Err(GroupError::NotSubgroup(format!("{members:?} is not closed under products")));
                }
            }
        }
        Ok(Subgroup { members })
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, g: usize) -> bool {
        self.members.binary_search(&g).is_ok()
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.members.iter().all(|&m| other.contains(m))
    }

    /// `g H g⁻¹`.
    pub fn conjugate(&self, group: &FiniteGroup, g: usize) -> Subgroup {
        let mut members: Vec<usize> = self.members.iter().map(|&h| group.conj(g, h)).collect();
        members.sort_unstable();
        Subgroup { members }
    }

    /// A small generating set, chosen greedily in element order.
    pub fn generators(&self, group: &FiniteGroup) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut span = vec![group.identity()];
        for &m in &self.members {
            if span.binary_search(&m).is_err() {
                gens.push(m);
                span = group.closure(&gens);
            }
        }
        gens
    }

    /// Conjugacy classes of the subgroup itself, ordered by their least element.
    pub fn classes(&self, group: &FiniteGroup) -> Vec<Vec<usize>> {
        let mut done: HashSet<usize> = HashSet::new();
        let mut out = Vec::new();
        for &x in &self.members {
            if done.contains(&x) {
                continue;
            }
            let cls: BTreeSet<usize> = self.members.iter().map(|&h| group.conj(h, x)).collect();
            done.extend(cls.iter().copied());
            out.push(cls.into_iter().collect());
        }
        out
    }
}

/// Conjugacy classes of a group with representatives and centralizers.
#[derive(Clone, Debug)]
pub struct ConjugacyData {
    pub classes: Vec<Vec<usize>>,
    pub class_of: Vec<usize>,
    /// least element of each class
    pub representatives: Vec<usize>,
    pub centralizers: Vec<Subgroup>,
}

impl ConjugacyData {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }
}

pub fn conjugacy_data(group: &FiniteGroup) -> ConjugacyData {
    let classes = group.full_subgroup().classes(group);
    let mut class_of = vec![0; group.order()];
    for (k, c) in classes.iter().enumerate() {
        for &x in c {
            class_of[x] = k;
        }
    }
    let representatives: Vec<usize> = classes.iter().map(|c| c[0]).collect();
    let centralizers = representatives.iter().map(|&t| group.centralizer(t)).collect();
    ConjugacyData {
        classes,
        class_of,
        representatives,
        centralizers,
    }
}

/// All subgroups, sorted by order and then by member list.
pub fn enumerate_subgroups(group: &FiniteGroup, bound: usize) -> Result<Vec<Subgroup>, GroupError> {
    if group.order() > bound {
        return Err(GroupError::TooLarge(bound));
    }
    let cyclics: BTreeSet<Vec<usize>> = group.elements().map(|g| group.closure(&[g])).collect();
    let mut all: BTreeSet<Vec<usize>> = cyclics.clone();
    let mut frontier: Vec<Vec<usize>> = all.iter().cloned().collect();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for h in &frontier {
            for c in &cyclics {
                if c.iter().all(|x| h.binary_search(x).is_ok()) {
                    continue;
                }
                let gens: Vec<usize> = h.iter().chain(c.iter()).copied().collect();
                let j = group.closure(&gens);
                if all.insert(j.clone()) {
                    next.push(j);
                }
            }
        }
        frontier = next;
    }
    let mut out: Vec<Subgroup> = all.into_iter().map(|members| Subgroup { members }).collect();
    out.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.members.cmp(&b.members)));
    Ok(out)
}

/// A rational class function on a subgroup `H`, stored per `H`-conjugacy class.
#[derive(Clone, Debug, PartialEq)]
pub struct ClassFunction<S> {
    subgroup: Subgroup,
    classes: Vec<Vec<usize>>,
    values: Vec<S>,
}

impl<S: Scalar> ClassFunction<S> {
    pub fn new(group: &FiniteGroup, subgroup: &Subgroup, values: Vec<S>) -> Self {
        let classes = subgroup.classes(group);
        assert_eq!(classes.len(), values.len(), "one value per conjugacy class");
        ClassFunction {
            subgroup: subgroup.clone(),
            classes,
            values,
        }
    }

    /// Builds a class function from pointwise values, which must be class-constant.
    pub fn from_fn(group: &FiniteGroup, subgroup: &Subgroup, f: impl Fn(usize) -> S) -> Self {
        let classes = subgroup.classes(group);
        let values = classes
            .iter()
            .map(|c| {
                let v = f(c[0]);
                debug_assert!(c.iter().all(|&x| f(x) == v), "not constant on a class");
                v
            })
            .collect();
        ClassFunction {
            subgroup: subgroup.clone(),
            classes,
            values,
        }
    }

    /// Indicator of the `k`-th conjugacy class of `H`.
    pub fn indicator(group: &FiniteGroup, subgroup: &Subgroup, k: usize) -> Self {
        let classes = subgroup.classes(group);
        let values = (0..classes.len()).map(|j| if j == k { S::one() } else { S::zero() }).collect();
        ClassFunction {
            subgroup: subgroup.clone(),
            classes,
            values,
        }
    }

    pub fn constant(group: &FiniteGroup, subgroup: &Subgroup, c: S) -> Self {
        Self::from_fn(group, subgroup, |_| c.clone())
    }

    pub fn subgroup(&self) -> &Subgroup {
        &self.subgroup
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn values(&self) -> &[S] {
        &self.values
    }

    pub fn dim(&self) -> usize {
        self.values.len()
    }

    fn class_index(&self, h: usize) -> Option<usize> {
        self.classes.iter().position(|c| c.binary_search(&h).is_ok())
    }

    /// Value at an element of `H`; zero outside `H`.
    pub fn value_at(&self, h: usize) -> S {
        match self.class_index(h) {
            Some(k) => self.values[k].clone(),
            None => S::zero(),
        }
    }

    /// `ind_H^K f (k) = (1/|H|) Σ_{x ∈ K, x⁻¹kx ∈ H} f(x⁻¹kx)`.
    pub fn induce(&self, group: &FiniteGroup, target: &Subgroup) -> Result<ClassFunction<S>, GroupError> {
        if !self.subgroup.is_subgroup_of(target) {
            return Err(GroupError::NotContained);
        }
        let scale = S::from_ratio(1, self.subgroup.order() as i64);
        Ok(ClassFunction::from_fn(group, target, |k| {
            let sum = target.members().iter().fold(S::zero(), |acc, &x| {
                let y = group.conj(group.inv(x), k);
                if self.subgroup.contains(y) {
                    acc + self.value_at(y)
                } else {
                    acc
                }
            });
            sum * scale.clone()
        }))
    }

    pub fn restrict(&self, group: &FiniteGroup, target: &Subgroup) -> Result<ClassFunction<S>, GroupError> {
        if !target.is_subgroup_of(&self.subgroup) {
            return Err(GroupError::NotContained);
        }
        Ok(ClassFunction::from_fn(group, target, |h| self.value_at(h)))
    }

    /// The transported function `y ↦ f(g⁻¹ y g)` on `g H g⁻¹`.
    pub fn conjugate(&self, group: &FiniteGroup, g: usize) -> ClassFunction<S> {
        let target = self.subgroup.conjugate(group, g);
        ClassFunction::from_fn(group, &target, |y| self.value_at(group.conj(group.inv(g), y)))
    }

    /// `⟨a, b⟩ = (1/|H|) Σ_h a(h) b(h)`.
    pub fn inner(&self, other: &ClassFunction<S>) -> S {
        assert_eq!(self.subgroup, other.subgroup, "inner product needs a common domain");
        let sum = self
            .classes
            .iter()
            .zip(self.values.iter().zip(&other.values))
            .fold(S::zero(), |acc, (c, (a, b))| {
                acc + S::from_int(c.len() as i64) * a.clone() * b.clone()
            });
        sum * S::from_ratio(1, self.subgroup.order() as i64)
    }

    pub fn add(&self, other: &ClassFunction<S>) -> ClassFunction<S> {
        assert_eq!(self.subgroup, other.subgroup);
        ClassFunction {
            subgroup: self.subgroup.clone(),
            classes: self.classes.clone(),
            values: self.values.iter().zip(&other.values).map(|(a, b)| a.clone() + b.clone()).collect(),
        }
    }

    pub fn scale(&self, c: &S) -> ClassFunction<S> {
        ClassFunction {
            subgroup: self.subgroup.clone(),
            classes: self.classes.clone(),
            values: self.values.iter().map(|a| a.clone() * c.clone()).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Q;

    fn q(n: i64) -> Q {
        Q::from_int(n)
    }

    #[test]
    fn trivial_table_group() {
        let g = build_group(
            &GroupSpec::Table {
                table: vec![vec![0]],
                generators: None,
            },
            10,
        )
        .unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(conjugacy_data(&g).len(), 1);
        assert_eq!(enumerate_subgroups(&g, 24).unwrap().len(), 1);
    }

    #[test]
    fn transposition_generates_order_two() {
        let g = build_group(
            &GroupSpec::Permutations {
                degree: 2,
                generators: vec![vec![1, 0]],
            },
            10,
        )
        .unwrap();
        assert_eq!(g.order(), 2);
        assert_eq!(g.generators(), &[1]);
    }

    #[test]
    fn s3_from_generators() {
        // brute-force closure: 6 elements, classes of sizes 1, 2, 3
        let g = build_group(
            &GroupSpec::Permutations {
                degree: 3,
                generators: vec![vec![1, 0, 2], vec![1, 2, 0]],
            },
            10,
        )
        .unwrap();
        assert_eq!(g.order(), 6);
        let cd = conjugacy_data(&g);
        assert_eq!(cd.len(), 3);
        let mut sizes: Vec<usize> = cd.classes.iter().map(Vec::len).collect();
        sizes.sort();
        assert_eq!(sizes, vec![1, 2, 3]);
        let transposition = g.permutation(1).unwrap().to_vec();
        assert_eq!(transposition, vec![0, 2, 1]);
        let k = cd.class_of[1];
        assert_eq!(cd.centralizers[k].order(), 2);
        for (k, c) in cd.classes.iter().enumerate() {
            assert_eq!(c.len() * cd.centralizers[k].order(), 6);
        }
    }

    #[test]
    fn table_errors() {
        let bad = GroupSpec::Table {
            table: vec![vec![0, 1], vec![1]],
            generators: None,
        };
        assert_eq!(build_group(&bad, 10), Err(GroupError::NotSquare(1)));
        // x*y = x is associative but has no two-sided identity
        let left_zero = GroupSpec::Table {
            table: vec![vec![0, 0], vec![1, 1]],
            generators: None,
        };
        assert_eq!(build_group(&left_zero, 10), Err(GroupError::NoIdentity));
        let nonassoc = GroupSpec::Table {
            table: vec![vec![0, 1, 2], vec![1, 0, 0], vec![2, 2, 0]],
            generators: None,
        };
        assert!(matches!(build_group(&nonassoc, 10), Err(GroupError::NotAssociative(..))));
        let big = GroupSpec::Permutations {
            degree: 5,
            generators: vec![vec![1, 0, 2, 3, 4], vec![1, 2, 3, 4, 0]],
        };
        assert_eq!(build_group(&big, 24), Err(GroupError::TooLarge(24)));
        let notperm = GroupSpec::Permutations {
            degree: 3,
            generators: vec![vec![0, 0, 1]],
        };
        assert_eq!(build_group(&notperm, 24), Err(GroupError::BadPermutation(0, 3)));
    }

    #[test]
    fn abelian_groups_have_singleton_classes() {
        for g in [cyclic(4), cyclic(5), klein_four()] {
            let cd = conjugacy_data(&g);
            assert_eq!(cd.len(), g.order());
            assert!(cd.centralizers.iter().all(|c| c.order() == g.order()));
        }
    }

    #[test]
    fn subgroup_counts() {
        // brute force over all subsets
        fn brute(g: &FiniteGroup) -> usize {
            let n = g.order();
            (0u32..(1 << n))
                .filter(|mask| {
                    let m: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
                    Subgroup::new(g, m.clone()).map(|s| s.members().len() == m.len()).unwrap_or(false)
                })
                .count()
        }
        for (g, expect) in [
            (cyclic(4), 3),
            (symmetric(3), 6),
            (klein_four(), 5),
            (dihedral(4), 10),
            (quaternion(), 6),
        ] {
            let subs = enumerate_subgroups(&g, 24).unwrap();
            assert_eq!(subs.len(), expect);
            assert_eq!(subs.len(), brute(&g));
            assert!(subs.windows(2).all(|w| w[0].order() <= w[1].order()));
        }
        assert!(matches!(enumerate_subgroups(&symmetric(5), 24), Err(GroupError::TooLarge(24))));
    }

    #[test]
    fn quaternion_is_nonabelian_with_five_classes() {
        let g = quaternion();
        assert_eq!(g.order(), 8);
        assert!(!g.is_abelian());
        assert_eq!(conjugacy_data(&g).len(), 5);
        assert!(g.verify_axioms());
    }

    #[test]
    fn induction_from_trivial_to_order_two() {
        let g = cyclic(2);
        let e = g.trivial_subgroup();
        let one = ClassFunction::<Q>::constant(&g, &e, q(1));
        let ind = one.induce(&g, &g.full_subgroup()).unwrap();
        assert_eq!(ind.values(), &[q(2), q(0)]);
        let back = ind.restrict(&g, &e).unwrap();
        assert_eq!(back.values(), &[q(2)]);
        assert_eq!(one.induce(&g, &e).unwrap(), one);
    }

    #[test]
    fn induction_requires_containment() {
        let g = symmetric(3);
        let subs = enumerate_subgroups(&g, 24).unwrap();
        let a = &subs[1];
        let b = &subs[2];
        let f = ClassFunction::<Q>::constant(&g, a, q(1));
        assert_eq!(f.induce(&g, b), Err(GroupError::NotContained));
        assert_eq!(f.restrict(&g, b), Err(GroupError::NotContained));
    }
}
