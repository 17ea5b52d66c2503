//! Built-in example actions and the checks run over them.

use crate::cosheaf::compare_bredon_cosheaf;
use crate::cyclic::{hkr_check, hp_at_level, GAlgebra, HpOptions, HpStrategy, OmegaForms, TraceMap, DEFAULT_FORM_BUDGET};
use crate::delocalized::{bs_bivariant, delocalized_point};
use crate::fingroup::{cyclic, dihedral, klein_four, quaternion, symmetric, trivial_group, FiniteGroup};
use crate::gcomplex::{GComplex, GComplexError, SComplex};
use crate::homalg::{GradedDims, DEFAULT_HOM_BUDGET};
use crate::{bredon, cosheaf, Error, Q};

/// A group acting on a complex given by its maximal simplices.
#[derive(Clone, Debug)]
pub struct Instance {
    pub name: &'static str,
    pub group: FiniteGroup,
    pub vertices: usize,
    pub maximal: Vec<Vec<usize>>,
    /// one vertex permutation per group generator
    pub generators: Vec<Vec<usize>>,
    pub subdivide: bool,
}

impl Instance {
    pub fn build(&self) -> Result<GComplex, GComplexError> {
        let k = SComplex::numbered(self.vertices, &self.maximal)?;
        let x = GComplex::new(k, self.group.clone(), &self.generators)?;
        Ok(if self.subdivide { x.subdivide() } else { x })
    }

    pub fn is_zero_dimensional(&self) -> bool {
        self.maximal.iter().all(|s| s.len() == 1)
    }
}

fn points(n: usize) -> Vec<Vec<usize>> {
    (0..n).map(|i| vec![i]).collect()
}

fn cycle(n: usize) -> Vec<Vec<usize>> {
    (0..n).map(|i| vec![i, (i + 1) % n]).collect()
}

fn inst(name: &'static str, group: FiniteGroup, vertices: usize, maximal: Vec<Vec<usize>>, generators: Vec<Vec<usize>>) -> Instance {
    Instance {
        name,
        group,
        vertices,
        maximal,
        generators,
        subdivide: false,
    }
}

fn subdivided(mut i: Instance) -> Instance {
    i.subdivide = true;
    i
}

/// The corpus, positive-dimensional instances first.
pub fn instances() -> Vec<Instance> {
    let tetra_boundary = vec![vec![0, 1, 2], vec![0, 1, 3], vec![0, 2, 3], vec![1, 2, 3]];
    vec![
        inst("trivial-circle", trivial_group(), 3, cycle(3), vec![]),
        inst("trivial-sphere", trivial_group(), 4, tetra_boundary, vec![]),
        subdivided(inst("c2-swapped-edge", cyclic(2), 2, vec![vec![0, 1]], vec![vec![1, 0]])),
        inst("c2-antipodal-hexagon", cyclic(2), 6, cycle(6), vec![vec![3, 4, 5, 0, 1, 2]]),
        subdivided(inst("c3-filled-triangle", cyclic(3), 3, vec![vec![0, 1, 2]], vec![vec![1, 2, 0]])),
        subdivided(inst(
            "s3-filled-triangle",
            symmetric(3),
            3,
            vec![vec![0, 1, 2]],
            vec![vec![1, 0, 2], vec![1, 2, 0]],
        )),
        subdivided(inst(
            "s3-hollow-triangle",
            symmetric(3),
            3,
            cycle(3),
            vec![vec![1, 0, 2], vec![1, 2, 0]],
        )),
        inst("c4-square", cyclic(4), 4, cycle(4), vec![vec![1, 2, 3, 0]]),
        subdivided(inst(
            "v4-square",
            klein_four(),
            4,
            cycle(4),
            vec![vec![1, 0, 3, 2], vec![2, 3, 0, 1]],
        )),
        subdivided(inst(
            "d4-square",
            dihedral(4),
            4,
            cycle(4),
            vec![vec![1, 2, 3, 0], vec![0, 3, 2, 1]],
        )),
        inst("trivial-point", trivial_group(), 1, points(1), vec![]),
        inst("trivial-two-points", trivial_group(), 2, points(2), vec![]),
        inst("c2-point", cyclic(2), 1, points(1), vec![vec![0]]),
        inst("c2-free-pair", cyclic(2), 2, points(2), vec![vec![1, 0]]),
        inst("c2-three-points", cyclic(2), 3, points(3), vec![vec![1, 0, 2]]),
        inst("c3-point", cyclic(3), 1, points(1), vec![vec![0]]),
        inst("c3-three-points", cyclic(3), 3, points(3), vec![vec![1, 2, 0]]),
        inst("c4-two-points", cyclic(4), 2, points(2), vec![vec![1, 0]]),
        inst("c4-three-points", cyclic(4), 3, points(3), vec![vec![1, 0, 2]]),
        inst("v4-point", klein_four(), 1, points(1), vec![vec![0], vec![0]]),
        inst("v4-three-points", klein_four(), 3, points(3), vec![vec![1, 0, 2], vec![0, 1, 2]]),
        inst("s3-three-points", symmetric(3), 3, points(3), vec![vec![1, 0, 2], vec![1, 2, 0]]),
        inst("q8-point", quaternion(), 1, points(1), vec![vec![0], vec![0]]),
        inst("q8-two-points", quaternion(), 2, points(2), vec![vec![0, 1], vec![1, 0]]),
    ]
}

pub fn find(name: &str) -> Option<Instance> {
    instances().into_iter().find(|i| i.name == name)
}

/// A point with the trivial action of `group`.
pub fn point(group: &FiniteGroup) -> GComplex {
    GComplex::trivial_action(SComplex::numbered(1, &[vec![0]]).expect("point"), group.clone())
}

/// Dimensions agree in every degree, missing degrees counting as zero.
pub fn same_dims(a: &GradedDims, b: &GradedDims) -> bool {
    let lo = a.lo.min(b.lo);
    let hi = a.hi().max(b.hi());
    (lo..=hi).all(|n| a.get(n) == b.get(n))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub criterion: u8,
    pub subject: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(criterion: u8, subject: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Check {
            criterion,
            subject: subject.into(),
            passed,
            detail: detail.into(),
        }
    }
}

fn dims_str(d: &GradedDims) -> String {
    format!("{:?}", d.trimmed().dims)
}

/// Bredon and cosheaf complexes are isomorphic with matching homology.
pub fn check_bredon_cosheaf(name: &str, x: &GComplex) -> Result<Check, Error> {
    let c = compare_bredon_cosheaf::<Q>(x)?;
    let b = c.bredon.clone();
    Ok(Check::new(
        1,
        name,
        c.is_iso() && c.homology_match(),
        format!(
            "chain map {}, ψφ = id {}, φψ = id {}, homology {}",
            c.well_defined,
            c.psi_phi_identity,
            c.phi_psi_identity,
            dims_str(&b)
        ),
    ))
}

/// Algebras whose forms are checked for the paramixed and projector identities.
pub fn test_algebras() -> Result<Vec<(String, GAlgebra<Q>)>, Error> {
    let mut out = Vec::new();
    for g in [trivial_group(), cyclic(2), klein_four()] {
        out.push((format!("base field, |G| = {}", g.order()), GAlgebra::base_field(&g)));
    }
    for i in instances().into_iter().filter(Instance::is_zero_dimensional) {
        out.push((format!("C({})", i.name), GAlgebra::functions_on(&i.build()?)?));
    }
    let pair = find("c2-free-pair").expect("corpus instance");
    let a = GAlgebra::functions_on(&pair.build()?)?;
    let k = GAlgebra::compact_operators(a.group());
    out.push(("C(c2-free-pair) ⊗ K_G".into(), GAlgebra::tensor(&a, &k)?));
    Ok(out)
}

/// Paramixed identities (criterion 2) and projector identities (criterion 3) in degrees ≤ 2.
pub fn check_forms(name: &str, a: &GAlgebra<Q>) -> Result<[Check; 2], Error> {
    let f = OmegaForms::new(a, 3, DEFAULT_FORM_BUDGET)?;
    let p = f.check_paramixed();
    let e = f.check_projector();
    Ok([
        Check::new(2, name, p.holds(), format!("dims {:?}, {:?}", f.dims(), p)),
        Check::new(3, name, e.holds(), format!("{e:?}")),
    ])
}

pub fn check_hkr(name: &str, x: &GComplex) -> Result<Check, Error> {
    let r = hkr_check::<Q>(x, 2, DEFAULT_FORM_BUDGET)?;
    Ok(Check::new(
        4,
        name,
        r.holds(),
        format!(
            "Σ|X^t| = {}, Hochschild {:?}, rank α = {}",
            r.expected_h0(),
            r.hochschild,
            r.alpha_rank
        ),
    ))
}

pub fn check_trace(name: &str, a: &GAlgebra<Q>) -> Result<Check, Error> {
    let r = TraceMap::new(a, 2, DEFAULT_FORM_BUDGET)?.check();
    Ok(Check::new(5, name, r.holds(), format!("{r:?}")))
}

pub fn check_bs_point(name: &str, x: &GComplex) -> Result<Check, Error> {
    let bs = bs_bivariant::<Q>(x, &point(x.group()), DEFAULT_HOM_BUDGET)?;
    let dp = delocalized_point::<Q>(x)?;
    Ok(Check::new(
        6,
        name,
        same_dims(&bs, &dp),
        format!("bs {} deloc {}", dims_str(&bs), dims_str(&dp)),
    ))
}

/// HP at levels (2,1) and (3,2), both strategies, against the folded bivariant groups.
pub fn check_hp(name: &str, x: &GComplex, y: &GComplex) -> Result<Check, Error> {
    let a = GAlgebra::<Q>::functions_on(x)?;
    let b = GAlgebra::<Q>::functions_on(y)?;
    let bs = bs_bivariant::<Q>(x, y, DEFAULT_HOM_BUDGET)?.fold_parity();
    let mut got = Vec::new();
    for levels in [(2, 1), (3, 2)] {
        for strategy in [HpStrategy::Literal, HpStrategy::Reduced] {
            let r = hp_at_level(
                &a,
                &b,
                &HpOptions {
                    levels,
                    strategy,
                    ..HpOptions::default()
                },
            )?;
            got.push((r.even, r.odd));
        }
    }
    Ok(Check::new(7, name, got.iter().all(|&g| g == bs), format!("bs {bs:?}, hp {got:?}")))
}

/// Trivial group: every engine gives ordinary (co)homology.
pub fn check_trivial(name: &str, x: &GComplex, expected: &[usize]) -> Result<Check, Error> {
    let want = GradedDims {
        lo: 0,
        dims: expected.to_vec(),
    };
    let b = bredon::bredon_homology::<Q>(x)?;
    let c = cosheaf::cosheaf_homology::<Q>(x)?;
    let d = delocalized_point::<Q>(x)?;
    Ok(Check::new(
        8,
        name,
        [&b, &c, &d].iter().all(|h| same_dims(h, &want)),
        format!("bredon {} cosheaf {} deloc {}", dims_str(&b), dims_str(&c), dims_str(&d)),
    ))
}

/// Every check on the built-in corpus, in criterion order.
pub fn run_all() -> Result<Vec<Check>, Error> {
    let all = instances();
    let built: Vec<(Instance, GComplex)> = all
        .into_iter()
        .map(|i| {
            let x = i.build()?;
            Ok((i, x))
        })
        .collect::<Result<_, Error>>()?;
    let mut out = Vec::new();
    for (i, x) in &built {
        out.push(check_bredon_cosheaf(i.name, x)?);
    }
    for (name, a) in test_algebras()? {
        out.extend(check_forms(&name, &a)?);
    }
    for (i, x) in built.iter().filter(|(i, _)| i.is_zero_dimensional()) {
        out.push(check_hkr(i.name, x)?);
    }
    let c2 = cyclic(2);
    out.push(check_trace("base field, |G| = 2", &GAlgebra::base_field(&c2))?);
    let pair = find("c2-free-pair").expect("corpus instance").build()?;
    out.push(check_trace("C(c2-free-pair)", &GAlgebra::functions_on(&pair)?)?);
    for (i, x) in &built {
        out.push(check_bs_point(i.name, x)?);
    }
    for pair in hp_pairs(&built) {
        let ((ni, x), (nj, y)) = pair;
        out.push(check_hp(&format!("{ni} → {nj}"), x, y)?);
    }
    for (name, want) in [
        ("trivial-point", vec![1]),
        ("trivial-circle", vec![1, 1]),
        ("trivial-sphere", vec![1, 0, 1]),
    ] {
        let (_, x) = built.iter().find(|(i, _)| i.name == name).expect("corpus instance");
        out.push(check_trivial(name, x, &want)?);
    }
    Ok(out)
}

/// A corpus space with its name.
pub type Named<'a> = (&'static str, &'a GComplex);

/// Ordered pairs of 0-dimensional instances over the same group of order ≤ 4.
pub fn hp_pairs(built: &[(Instance, GComplex)]) -> Vec<(Named<'_>, Named<'_>)> {
    let zd: Vec<&(Instance, GComplex)> = built
        .iter()
        .filter(|(i, _)| i.is_zero_dimensional() && i.group.order() <= 4)
        .collect();
    let mut out = Vec::new();
    for a in &zd {
        for b in &zd {
            if a.0.group == b.0.group {
                out.push(((a.0.name, &a.1), (b.0.name, &b.1)));
            }
        }
    }
    out
}
