//! Equivariant periodic cyclic cohomology at a fixed pair of Hodge levels.

use crate::fingroup::conjugacy_data;
use crate::homalg::{average_projector, image, kernel, Matrix, RawHom, Subspace};
use crate::scalar::Scalar;

use super::algebra::GAlgebra;
use super::forms::{averaged_powers, OmegaForms};
use super::hodge::{HodgeBlock, HodgeLevel};
use super::CyclicError;

/// How the invariant Hom complexes are evaluated.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HpStrategy {
    /// Build the invariant Hom complex of each summand and take its homology.
    Literal,
    /// Split off the contractible `(id − E)` part and count invariant maps
    /// between homologies with characters.
    Reduced,
}

#[derive(Clone, Debug)]
pub struct HpOptions {
    pub levels: (usize, usize),
    pub stabilize: bool,
    pub strategy: HpStrategy,
    pub form_budget: usize,
    pub hom_budget: usize,
}

impl Default for HpOptions {
    fn default() -> Self {
        HpOptions {
            levels: (2, 1),
            stabilize: false,
            strategy: HpStrategy::Literal,
            form_budget: super::DEFAULT_FORM_BUDGET,
            hom_budget: crate::homalg::DEFAULT_HOM_BUDGET,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HpResult {
    pub even: usize,
    pub odd: usize,
    /// `(class representative, even, odd)` per conjugacy class
    pub per_class: Vec<(usize, usize, usize)>,
}

/// `HP^*_G(A, B)` at levels `(m, n)`: homology of `Hom_G(θ^m A, θ^n B)`.
pub fn hp_at_level<S: Scalar>(a: &GAlgebra<S>, b: &GAlgebra<S>, opts: &HpOptions) -> Result<HpResult, CyclicError> {
    if a.group() != b.group() {
        return Err(CyclicError::InvalidAlgebra("algebras over different groups".into()));
    }
    let (a, b) = if opts.stabilize {
        let k = GAlgebra::compact_operators(a.group());
        (GAlgebra::tensor(a, &k)?, GAlgebra::tensor(b, &k)?)
    } else {
        if !a.is_unital() || !b.is_unital() {
            return Err(CyclicError::NotUnital);
        }
        (a.clone(), b.clone())
    };
    let (m, n) = opts.levels;
    let fa = OmegaForms::new(&a, m + 1, opts.form_budget)?;
    let fb = OmegaForms::new(&b, n + 1, opts.form_budget)?;
    let ta = HodgeLevel::new(&fa, m)?;
    let tb = HodgeLevel::new(&fb, n)?;
    hom_homology(&ta, &tb, opts.strategy, opts.hom_budget)
}

/// Homology of `Hom_G(C, D)` for two Hodge levels over the same group.
pub fn hom_homology<S: Scalar>(c: &HodgeLevel<S>, d: &HodgeLevel<S>, strategy: HpStrategy, budget: usize) -> Result<HpResult, CyclicError> {
    let group = c.group().clone();
    let classes = conjugacy_data(&group);
    let mut per_class = Vec::with_capacity(classes.len());
    for (k, &t) in classes.representatives.iter().enumerate() {
        let z = &classes.centralizers[k];
        let cb = c.block(t);
        let db = d.block(t);
        let (e, o) = match strategy {
            HpStrategy::Literal => literal(c, d, &cb, &db, z, budget)?,
            HpStrategy::Reduced => reduced(c, d, &cb, &db, z)?,
        };
        per_class.push((t, e, o));
    }
    Ok(HpResult {
        even: per_class.iter().map(|x| x.1).sum(),
        odd: per_class.iter().map(|x| x.2).sum(),
        per_class,
    })
}

fn literal<S: Scalar>(
    c: &HodgeLevel<S>,
    d: &HodgeLevel<S>,
    cb: &HodgeBlock<S>,
    db: &HodgeBlock<S>,
    z: &crate::fingroup::Subgroup,
    budget: usize,
) -> Result<(usize, usize), CyclicError> {
    let group = c.group();
    let raw = RawHom::build(&cb.para, &db.para, budget)?;
    let ops: Vec<(Matrix<S>, Matrix<S>)> = z
        .members()
        .iter()
        .map(|&s| {
            let (ce, co) = c.block_action(cb, group.inv(s));
            let (de, d_o) = d.block_action(db, s);
            raw.conjugation(&ce, &co, &de, &d_o)
        })
        .collect();
    let lookup = |s: usize| &ops[z.members().binary_search(&s).expect("member")];
    let pe = average_projector(group, z, |s| lookup(s).0.clone())?;
    let po = average_projector(group, z, |s| lookup(s).1.clone())?;
    let hom = raw.restrict(&image(&pe), &image(&po))?;
    Ok(hom.homology()?)
}

// χ(s) = tr(sE | ker ∂) − tr(sE | im ∂) on each parity of a block
fn characters<S: Scalar>(level: &HodgeLevel<S>, block: &HodgeBlock<S>, z: &crate::fingroup::Subgroup) -> Result<Vec<(S, S)>, CyclicError> {
    let group = level.group();
    let t_inv = group.inv(block.t);
    let (te, to) = level.block_action(block, t_inv);
    let e = group.exponent();
    let (ee, eo) = (averaged_powers(&te, e), averaged_powers(&to, e));
    let p = &block.para;
    let ker_e = kernel(&p.d_even);
    let ker_o = kernel(&p.d_odd);
    let im_e: Subspace<S> = image(&p.d_odd);
    let im_o: Subspace<S> = image(&p.d_even);
    z.members()
        .iter()
        .map(|&s| {
            let (se, so) = level.block_action(block, s);
            let (ae, ao) = (se.mul(&ee), so.mul(&eo));
            Ok((
                ker_e.restricted_trace(&ae) - im_e.restricted_trace(&ae),
                ker_o.restricted_trace(&ao) - im_o.restricted_trace(&ao),
            ))
        })
        .collect()
}

fn reduced<S: Scalar>(
    c: &HodgeLevel<S>,
    d: &HodgeLevel<S>,
    cb: &HodgeBlock<S>,
    db: &HodgeBlock<S>,
    z: &crate::fingroup::Subgroup,
) -> Result<(usize, usize), CyclicError> {
    let group = c.group();
    let xc = characters(c, cb, z)?;
    let xd = characters(d, db, z)?;
    let at = |chars: &[(S, S)], s: usize| chars[z.members().binary_search(&s).expect("member")].clone();
    let inner = |pc: usize, pd: usize| -> Result<usize, CyclicError> {
        let mut acc = S::zero();
        for &s in z.members() {
            let u = at(&xc, group.inv(s));
            let v = at(&xd, s);
            let u = if pc == 0 { u.0 } else { u.1 };
            let v = if pd == 0 { v.0 } else { v.1 };
            acc = acc + u * v;
        }
        let val = acc * S::from_ratio(1, z.order() as i64);
        let r = val.magnitude().round();
        let integral = if S::EXACT {
            val == S::from_int(r as i64)
        } else {
            (val.magnitude() - r).abs() < 1e-6
        };
        if !integral {
            return Err(CyclicError::Verification(format!(
                "character inner product {val:?} is not an integer"
            )));
        }
        Ok(r as usize)
    };
    Ok((inner(0, 0)? + inner(1, 1)?, inner(0, 1)? + inner(1, 0)?))
}
