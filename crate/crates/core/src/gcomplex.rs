//! Finite simplicial complexes with simplicial group actions.
//!
//! Simplices are sorted vertex tuples over a fixed set of vertex ids
//! `0..labels.len()`; subcomplexes keep the ambient ids so that maps between
//! fixed-point sets are plain vertex permutations.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use thiserror::Error;

use crate::fingroup::{conjugacy_data, ConjugacyData, FiniteGroup, Subgroup};
use crate::homalg::{ChainComplex, Matrix};
use crate::scalar::Scalar;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GComplexError {
    #[error("gcomplex: vertex {0} out of range")]
    VertexOutOfRange(usize),
    #[error("gcomplex: simplex {0} repeats a vertex")]
    RepeatedVertex(String),
    #[error("gcomplex: empty simplex")]
    EmptySimplex,
    #[error("gcomplex: expected one vertex permutation per generator ({expected}), got {got}")]
    ActionCount { expected: usize, got: usize },
    #[error("gcomplex: action of generator {0} is not a permutation of the vertices")]
    NotAPermutation(usize),
    #[error("gcomplex: vertex action is not a group homomorphism (conflict at element {0})")]
    NotHomomorphism(usize),
    #[error("gcomplex: element {element} maps simplex {simplex} outside the complex")]
    NotSimplicial { element: usize, simplex: String },
    #[error("gcomplex: action is not type-preserving: stabilizer of {0} moves its vertices; pass to the barycentric subdivision")]
    NotTypePreserving(String),
}

/// Finite abstract simplicial complex, closed under faces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SComplex {
    labels: Vec<String>,
    simplices: Vec<Vec<Vec<usize>>>,
}

impl SComplex {
    /// Closure of a list of simplices. Every labelled vertex is included.
    pub fn from_maximal(labels: Vec<String>, maximal: &[Vec<usize>]) -> Result<Self, GComplexError> {
        let n = labels.len();
        let mut all: BTreeSet<Vec<usize>> = (0..n).map(|v| vec![v]).collect();
        for s in maximal {
            if s.is_empty() {
                return Err(GComplexError::EmptySimplex);
            }
            if let Some(&v) = s.iter().find(|&&v| v >= n) {
                return Err(GComplexError::VertexOutOfRange(v));
            }
            let mut t = s.clone();
            t.sort_unstable();
            t.dedup();
            if t.len() != s.len() {
                return Err(GComplexError::RepeatedVertex(format!("{s:?}")));
            }
            add_faces(&t, &mut all);
        }
        Ok(Self::from_set(labels, all))
    }

    /// Complex with vertices labelled `0..n`.
    pub fn numbered(n: usize, maximal: &[Vec<usize>]) -> Result<Self, GComplexError> {
        Self::from_maximal((0..n).map(|v| v.to_string()).collect(), maximal)
    }

    fn from_set(labels: Vec<String>, all: BTreeSet<Vec<usize>>) -> Self {
        let mut simplices: Vec<Vec<Vec<usize>>> = Vec::new();
        for s in all {
            let p = s.len() - 1;
            if simplices.len() <= p {
                simplices.resize(p + 1, Vec::new());
            }
            simplices[p].push(s);
        }
        for layer in &mut simplices {
            layer.sort();
        }
        while simplices.last().is_some_and(Vec::is_empty) {
            simplices.pop();
        }
        SComplex { labels, simplices }
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Size of the ambient vertex id range.
    pub fn n_ids(&self) -> usize {
        self.labels.len()
    }

    /// Dimension, `-1` for the empty complex.
    pub fn dim(&self) -> i64 {
        self.simplices.len() as i64 - 1
    }

    pub fn is_empty(&self) -> bool {
        self.simplices.is_empty()
    }

    pub fn simplices(&self, p: usize) -> &[Vec<usize>] {
        self.simplices.get(p).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn count(&self, p: usize) -> usize {
        self.simplices(p).len()
    }

    /// Simplex counts `f_0, f_1, …`.
    pub fn counts(&self) -> Vec<usize> {
        self.simplices.iter().map(Vec::len).collect()
    }

    pub fn total(&self) -> usize {
        self.counts().iter().sum()
    }

    pub fn vertices(&self) -> Vec<usize> {
        self.simplices(0).iter().map(|s| s[0]).collect()
    }

    pub fn index_of(&self, s: &[usize]) -> Option<usize> {
        self.simplices(s.len().checked_sub(1)?)
            .binary_search_by(|x| x.as_slice().cmp(s))
            .ok()
    }

    pub fn contains(&self, s: &[usize]) -> bool {
        self.index_of(s).is_some()
    }

    pub fn is_subcomplex_of(&self, other: &SComplex) -> bool {
        self.simplices.iter().flatten().all(|s| other.contains(s))
    }

    pub fn euler(&self) -> i64 {
        self.counts()
            .iter()
            .enumerate()
            .map(|(p, &c)| if p % 2 == 0 { c as i64 } else { -(c as i64) })
            .sum()
    }

    pub fn describe(&self, s: &[usize]) -> String {
        let names: Vec<&str> = s.iter().map(|&v| self.labels[v].as_str()).collect();
        format!("{{{}}}", names.join(","))
    }

    /// Full subcomplex on the vertices satisfying `keep`.
    pub fn full_subcomplex(&self, keep: impl Fn(usize) -> bool) -> SComplex {
        let simplices: Vec<Vec<Vec<usize>>> = self
            .simplices
            .iter()
            .map(|layer| layer.iter().filter(|s| s.iter().all(|&v| keep(v))).cloned().collect())
            .collect();
        let mut out = SComplex {
            labels: self.labels.clone(),
            simplices,
        };
        while out.simplices.last().is_some_and(Vec::is_empty) {
            out.simplices.pop();
        }
        out
    }

    /// Simplicial boundary `C_p → C_{p−1}` with the alternating incidence signs.
    pub fn boundary_matrix<S: Scalar>(&self, p: usize) -> Matrix<S> {
        if p == 0 {
            return Matrix::zeros(0, self.count(0));
        }
        let mut trip = Vec::new();
        for (j, s) in self.simplices(p).iter().enumerate() {
            for i in 0..s.len() {
                let face: Vec<usize> = s.iter().enumerate().filter(|&(k, _)| k != i).map(|(_, &v)| v).collect();
                let r = self.index_of(&face).expect("closed under faces");
                trip.push((r, j, if i % 2 == 0 { S::one() } else { -S::one() }));
            }
        }
        Matrix::from_triplets(self.count(p - 1), self.count(p), trip)
    }

    /// Simplicial chains in degrees `0..=dim`.
    pub fn chain_complex<S: Scalar>(&self) -> ChainComplex<S> {
        let dims = self.counts();
        let boundaries = (1..dims.len()).map(|p| self.boundary_matrix(p)).collect();
        ChainComplex::new(0, dims, boundaries).expect("simplicial boundary squares to zero")
    }

    /// Simplicial cochains stored as a chain complex in degrees `−dim..=0`,
    /// with `C^p` in degree `−p` and the coboundary as the boundary map.
    pub fn cochain_complex<S: Scalar>(&self) -> ChainComplex<S> {
        let top = self.simplices.len();
        if top == 0 {
            return ChainComplex::new(0, vec![], vec![]).expect("empty complex");
        }
        let dims: Vec<usize> = (0..top).rev().map(|p| self.count(p)).collect();
        // leaves degree −p for p = top−2 … 0 in increasing degree order
        let boundaries = (1..top).rev().map(|p| self.boundary_matrix::<S>(p).transpose()).collect();
        ChainComplex::new(-(top as i64 - 1), dims, boundaries).expect("coboundary squares to zero")
    }
}

fn add_faces(s: &[usize], out: &mut BTreeSet<Vec<usize>>) {
    if !out.insert(s.to_vec()) && s.len() > 1 {
        // faces of an already present simplex are present too, except for the
        // singleton vertices we seed; those have no proper faces
        return;
    }
    if s.len() > 1 {
        for i in 0..s.len() {
            let f: Vec<usize> = s.iter().enumerate().filter(|&(k, _)| k != i).map(|(_, &v)| v).collect();
            add_faces(&f, out);
        }
    }
}

/// Sorts a vertex tuple and returns the parity sign of the sorting permutation.
pub fn sort_with_sign(mut v: Vec<usize>) -> (Vec<usize>, i8) {
    let mut sign = 1i8;
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && v[j - 1] > v[j] {
            v.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    (v, sign)
}

/// A simplex with an orientation relative to its sorted vertex order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrientedSimplex {
    pub simplex: Vec<usize>,
    pub sign: i8,
}

impl OrientedSimplex {
    /// Orientation given by an arbitrary vertex ordering.
    pub fn from_ordered(vertices: Vec<usize>) -> Self {
        let (simplex, sign) = sort_with_sign(vertices);
        OrientedSimplex { simplex, sign }
    }

    pub fn reversed(&self) -> Self {
        OrientedSimplex {
            simplex: self.simplex.clone(),
            sign: -self.sign,
        }
    }
}

/// Outcome of [`GComplex::validate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    pub simplicial: bool,
    pub type_preserving: bool,
    /// first simplex violating type preservation
    pub offending: Option<String>,
}

/// A simplicial complex with a simplicial action of a finite group.
#[derive(Clone, Debug)]
pub struct GComplex {
    complex: SComplex,
    group: FiniteGroup,
    // vertex permutation per group element
    perms: Vec<Vec<usize>>,
}

impl GComplex {
    /// Extends one vertex permutation per group generator to the whole group.
    pub fn new(complex: SComplex, group: FiniteGroup, generator_action: &[Vec<usize>]) -> Result<Self, GComplexError> {
        let gens = group.generators().to_vec();
        if generator_action.len() != gens.len() {
            return Err(GComplexError::ActionCount {
                expected: gens.len(),
                got: generator_action.len(),
            });
        }
        let n = complex.n_ids();
        for (i, p) in generator_action.iter().enumerate() {
            if !is_perm(p, n) {
                return Err(GComplexError::NotAPermutation(i));
            }
        }
        let mut perms: Vec<Option<Vec<usize>>> = vec![None; group.order()];
        perms[group.identity()] = Some((0..n).collect());
        let mut queue = VecDeque::from([group.identity()]);
        while let Some(g) = queue.pop_front() {
            let pg = perms[g].clone().expect("visited");
            for (s, ps) in gens.iter().zip(generator_action) {
                let h = group.mul(*s, g);
                let cand: Vec<usize> = pg.iter().map(|&v| ps[v]).collect();
                match &perms[h] {
                    Some(existing) if *existing != cand => return Err(GComplexError::NotHomomorphism(h)),
                    Some(_) => {}
                    None => {
                        perms[h] = Some(cand);
                        queue.push_back(h);
                    }
                }
            }
        }
        let perms: Vec<Vec<usize>> = perms.into_iter().map(|p| p.expect("generators generate")).collect();
        let x = GComplex { complex, group, perms };
        x.check_simplicial()?;
        Ok(x)
    }

    /// The trivial action of `group`.
    pub fn trivial_action(complex: SComplex, group: FiniteGroup) -> Self {
        let n = complex.n_ids();
        let perms = vec![(0..n).collect(); group.order()];
        GComplex { complex, group, perms }
    }

    /// Action given for every element at once.
    pub fn from_element_action(complex: SComplex, group: FiniteGroup, perms: Vec<Vec<usize>>) -> Result<Self, GComplexError> {
        let gens: Vec<Vec<usize>> = group.generators().iter().map(|&g| perms[g].clone()).collect();
        let x = GComplex::new(complex, group, &gens)?;
        match (0..x.group.order()).find(|&g| x.perms[g] != perms[g]) {
            Some(g) => Err(GComplexError::NotHomomorphism(g)),
            None => Ok(x),
        }
    }

    pub fn complex(&self) -> &SComplex {
        &self.complex
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn vertex_perm(&self, g: usize) -> &[usize] {
        &self.perms[g]
    }

    pub fn act_vertex(&self, g: usize, v: usize) -> usize {
        self.perms[g][v]
    }

    /// Image of a sorted simplex, re-sorted, with the orientation sign.
    pub fn act_simplex(&self, g: usize, s: &[usize]) -> (Vec<usize>, i8) {
        sort_with_sign(s.iter().map(|&v| self.perms[g][v]).collect())
    }

    fn check_simplicial(&self) -> Result<(), GComplexError> {
        for &g in self.group.generators() {
            for p in 0..self.complex.simplices.len() {
                for s in self.complex.simplices(p) {
                    let (img, _) = self.act_simplex(g, s);
                    if !self.complex.contains(&img) {
                        return Err(GComplexError::NotSimplicial {
                            element: g,
                            simplex: self.complex.describe(s),
                        });
                    }
                }
            }
        }
        Ok(())
    }

    fn all_simplices(&self) -> impl Iterator<Item = &Vec<usize>> {
        (0..self.complex.simplices.len()).flat_map(move |p| self.complex.simplices(p).iter())
    }

    pub fn validate(&self) -> ValidationReport {
        let simplicial = self
            .group
            .elements()
            .all(|g| self.all_simplices().all(|s| self.complex.contains(&self.act_simplex(g, s).0)));
        let offending = self
            .all_simplices()
            .find(|s| {
                self.group.elements().any(|g| {
                    let img: Vec<usize> = s.iter().map(|&v| self.perms[g][v]).collect();
                    let (sorted, _) = sort_with_sign(img.clone());
                    sorted == **s && img != **s
                })
            })
            .map(|s| self.complex.describe(s));
        ValidationReport {
            simplicial,
            type_preserving: offending.is_none(),
            offending,
        }
    }

    pub fn is_type_preserving(&self) -> bool {
        self.validate().type_preserving
    }

    pub fn require_type_preserving(&self) -> Result<(), GComplexError> {
        match self.validate().offending {
            Some(s) => Err(GComplexError::NotTypePreserving(s)),
            None => Ok(()),
        }
    }

    /// Barycentric subdivision: vertices are the simplices (ordered by
    /// dimension, then lexicographically) and simplices are flags.
    pub fn subdivide(&self) -> GComplex {
        let old: Vec<Vec<usize>> = self.all_simplices().cloned().collect();
        let index: BTreeMap<Vec<usize>, usize> = old.iter().cloned().enumerate().map(|(i, s)| (s, i)).collect();
        let labels: Vec<String> = old
            .iter()
            .map(|s| {
                if s.len() == 1 {
                    self.complex.labels[s[0]].clone()
                } else {
                    self.complex.describe(s)
                }
            })
            .collect();
        // flags ending at each simplex; indices increase along a flag
        let mut flags: Vec<Vec<Vec<usize>>> = Vec::with_capacity(old.len());
        for (i, s) in old.iter().enumerate() {
            let mut mine = vec![vec![i]];
            for mask in 1..(1u64 << s.len()) - 1 {
                let face: Vec<usize> = s
                    .iter()
                    .enumerate()
                    .filter(|&(k, _)| mask & (1 << k) != 0)
                    .map(|(_, &v)| v)
                    .collect();
                let j = index[&face];
                for f in &flags[j] {
                    let mut g = f.clone();
                    g.push(i);
                    mine.push(g);
                }
            }
            flags.push(mine);
        }
        let all: BTreeSet<Vec<usize>> = flags.into_iter().flatten().collect();
        let complex = SComplex::from_set(labels, all);
        let perms = (0..self.group.order())
            .map(|g| old.iter().map(|s| index[&self.act_simplex(g, s).0]).collect())
            .collect();
        GComplex {
            complex,
            group: self.group.clone(),
            perms,
        }
    }

    /// `X^t`: the full subcomplex on the vertices fixed by `t`.
    pub fn fixed_by_element(&self, t: usize) -> Result<SComplex, GComplexError> {
        self.require_type_preserving()?;
        Ok(self.fixed_unchecked(|v| self.perms[t][v] == v))
    }

    /// `X^H`: the full subcomplex on the vertices fixed by every element of `H`.
    pub fn fixed_by_subgroup(&self, h: &Subgroup) -> Result<SComplex, GComplexError> {
        self.require_type_preserving()?;
        Ok(self.fixed_unchecked(|v| h.members().iter().all(|&g| self.perms[g][v] == v)))
    }

    fn fixed_unchecked(&self, keep: impl Fn(usize) -> bool) -> SComplex {
        self.complex.full_subcomplex(keep)
    }

    /// Stabilizer of a simplex (setwise, which equals pointwise under type preservation).
    pub fn stabilizer(&self, s: &[usize]) -> Subgroup {
        let members = self.group.elements().filter(|&g| self.act_simplex(g, s).0 == s).collect();
        Subgroup::new(&self.group, members).expect("stabilizers are subgroups")
    }

    pub fn orbit_data(&self) -> Result<OrbitData, GComplexError> {
        self.require_type_preserving()?;
        let mut per_dim = Vec::new();
        let mut reps = Vec::new();
        for p in 0..self.complex.simplices.len() {
            let layer = self.complex.simplices(p);
            let mut info: Vec<Option<SimplexOrbit>> = vec![None; layer.len()];
            let mut layer_reps = Vec::new();
            for (i, s) in layer.iter().enumerate() {
                if info[i].is_some() {
                    continue;
                }
                layer_reps.push(i);
                let stabilizer = self.stabilizer(s);
                for g in self.group.elements() {
                    let (img, sign) = self.act_simplex(g, s);
                    let j = self.complex.index_of(&img).expect("simplicial");
                    if info[j].is_none() {
                        info[j] = Some(SimplexOrbit {
                            rep: i,
                            translator: g,
                            sign,
                            stabilizer: stabilizer.conjugate(&self.group, g),
                        });
                    }
                }
            }
            per_dim.push(info.into_iter().map(|x| x.expect("covered")).collect());
            reps.push(layer_reps);
        }
        Ok(OrbitData { per_dim, reps })
    }

    /// Signed images of the `p`-simplices of `from` under `g`, indexed in `to`.
    pub fn simplex_map(&self, g: usize, from: &SComplex, to: &SComplex, p: usize) -> Option<Vec<(usize, i8)>> {
        from.simplices(p)
            .iter()
            .map(|s| {
                let (img, sign) = self.act_simplex(g, s);
                to.index_of(&img).map(|j| (j, sign))
            })
            .collect()
    }

    /// Signed permutation matrix `C_p(from) → C_p(to)` induced by `g`.
    pub fn chain_map<S: Scalar>(&self, g: usize, from: &SComplex, to: &SComplex, p: usize) -> Matrix<S> {
        let map = self.simplex_map(g, from, to, p).expect("g maps `from` into `to`");
        Matrix::from_triplets(
            to.count(p),
            from.count(p),
            map.into_iter().enumerate().map(|(i, (j, s))| (j, i, S::from_int(s as i64))),
        )
    }

    pub fn brylinski_space(&self) -> Result<BrylinskiSpace, GComplexError> {
        self.require_type_preserving()?;
        let classes = conjugacy_data(&self.group);
        let fixed: Vec<SComplex> = self
            .group
            .elements()
            .map(|t| self.fixed_unchecked(|v| self.perms[t][v] == v))
            .collect();
        Ok(BrylinskiSpace { classes, fixed })
    }
}

fn is_perm(p: &[usize], n: usize) -> bool {
    let mut seen = vec![false; n];
    p.len() == n && p.iter().all(|&x| x < n && !std::mem::replace(&mut seen[x], true))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplexOrbit {
    /// index of the orbit representative in the same dimension
    pub rep: usize,
    /// least element `g` with `g · rep = σ`
    pub translator: usize,
    /// orientation sign of `g` on the representative
    pub sign: i8,
    pub stabilizer: Subgroup,
}

#[derive(Clone, Debug)]
pub struct OrbitData {
    /// per dimension, per simplex
    pub per_dim: Vec<Vec<SimplexOrbit>>,
    /// per dimension, the representative simplex indices (least in their orbit)
    pub reps: Vec<Vec<usize>>,
}

impl OrbitData {
    pub fn info(&self, p: usize, i: usize) -> &SimplexOrbit {
        &self.per_dim[p][i]
    }

    pub fn reps(&self, p: usize) -> &[usize] {
        self.reps.get(p).map(Vec::as_slice).unwrap_or(&[])
    }
}

/// The space of pairs `(t, x)` with `t·x = x`, stored as one fixed-point
/// complex per group element.
#[derive(Clone, Debug)]
pub struct BrylinskiSpace {
    pub classes: ConjugacyData,
    /// `X^t` for every element `t`
    pub fixed: Vec<SComplex>,
}

impl BrylinskiSpace {
    /// `X^t` for each conjugacy class representative, with its centralizer.
    pub fn components(&self) -> impl Iterator<Item = (usize, &SComplex, &Subgroup)> {
        self.classes
            .representatives
            .iter()
            .zip(&self.classes.centralizers)
            .map(move |(&t, z)| (t, &self.fixed[t], z))
    }

    /// `s: X^t → X^{sts⁻¹}` on `p`-simplices, as signed target indices.
    pub fn component_action(&self, x: &GComplex, s: usize, t: usize, p: usize) -> Vec<(usize, i8)> {
        let target = x.group().conj(s, t);
        x.simplex_map(s, &self.fixed[t], &self.fixed[target], p)
            .expect("s maps X^t onto X^{sts⁻¹}")
    }

    /// Total number of simplices over all elements.
    pub fn total(&self) -> usize {
        self.fixed.iter().map(SComplex::total).sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fingroup::{cyclic, symmetric, trivial_group};

    fn edge() -> SComplex {
        SComplex::numbered(2, &[vec![0, 1]]).unwrap()
    }

    #[test]
    fn closure_and_counts() {
        let tri = SComplex::numbered(3, &[vec![0, 1, 2]]).unwrap();
        assert_eq!(tri.counts(), vec![3, 3, 1]);
        assert_eq!(tri.euler(), 1);
        let sphere = SComplex::numbered(4, &[vec![0, 1, 2], vec![0, 1, 3], vec![0, 2, 3], vec![1, 2, 3]]).unwrap();
        assert_eq!(sphere.counts(), vec![4, 6, 4]);
        assert_eq!(sphere.euler(), 2);
        assert!(SComplex::numbered(2, &[vec![0, 0]]).is_err());
        assert!(SComplex::numbered(2, &[vec![0, 2]]).is_err());
    }

    #[test]
    fn cochains_are_transposed_chains() {
        let tri = SComplex::numbered(3, &[vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap();
        let c = tri.cochain_complex::<crate::Q>();
        assert_eq!((c.lo(), c.hi()), (-1, 0));
        assert_eq!(c.homology().dims, vec![1, 1]);
    }

    #[test]
    fn swap_edge_is_not_type_preserving_until_subdivided() {
        let x = GComplex::new(edge(), cyclic(2), &[vec![1, 0]]).unwrap();
        let r = x.validate();
        assert!(r.simplicial && !r.type_preserving);
        assert!(matches!(x.fixed_by_element(1), Err(GComplexError::NotTypePreserving(_))));
        let y = x.subdivide();
        assert_eq!(y.complex().counts(), vec![3, 2]);
        let r = y.validate();
        assert!(r.simplicial && r.type_preserving);
        let fixed = y.fixed_by_element(1).unwrap();
        assert_eq!(fixed.counts(), vec![1]);
        assert_eq!(fixed.labels()[fixed.vertices()[0]], "{0,1}");
    }

    #[test]
    fn subdivided_triangle() {
        let x = GComplex::trivial_action(SComplex::numbered(3, &[vec![0, 1, 2]]).unwrap(), trivial_group());
        assert_eq!(x.subdivide().complex().counts(), vec![7, 12, 6]);
    }

    #[test]
    fn homomorphism_is_checked() {
        // a 3-cycle cannot realise an involution
        let tri = SComplex::numbered(3, &[vec![0, 1, 2]]).unwrap();
        assert!(matches!(
            GComplex::new(tri, cyclic(2), &[vec![1, 2, 0]]),
            Err(GComplexError::NotHomomorphism(_))
        ));
        let s3 = symmetric(3);
        assert_eq!(s3.generators().len(), 2);
    }

    #[test]
    fn orbit_data_of_swapped_edge() {
        let y = GComplex::new(edge(), cyclic(2), &[vec![1, 0]]).unwrap().subdivide();
        let od = y.orbit_data().unwrap();
        assert_eq!(od.reps(0).len(), 2);
        assert_eq!(od.reps(1).len(), 1);
        for i in 0..2 {
            assert_eq!(od.info(1, i).stabilizer.order(), 1);
        }
        let mid = y.complex().index_of(&[2]).unwrap();
        assert_eq!(od.info(0, mid).stabilizer.order(), 2);
    }
}
