use serde_json::{json, Value};

use equihom::bredon::bredon_complex;
use equihom::corpus;
use equihom::cosheaf::{compare_bredon_cosheaf, cosheaf_complex};
use equihom::cyclic::{hkr_check, hp_at_level, GAlgebra, HpOptions, HpStrategy, OmegaForms, TraceMap, DEFAULT_FORM_BUDGET};
use equihom::delocalized::{bs_bivariant, delocalized_point};
use equihom::fingroup::FiniteGroup;
use equihom::gcomplex::GComplex;
use equihom::homalg::DEFAULT_HOM_BUDGET;
use equihom::Q;

use crate::input::{AlgebraKind, InputDocument, InputError};
use crate::report::graded;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Command {
    Bredon,
    Cosheaf,
    CompareBc,
    Bs,
    Deloc,
    Hp,
    CheckParamixed,
    HkrCheck,
    TraceCheck,
    Corpus,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Bredon => "bredon",
            Command::Cosheaf => "cosheaf",
            Command::CompareBc => "compare-bc",
            Command::Bs => "bs",
            Command::Deloc => "deloc",
            Command::Hp => "hp",
            Command::CheckParamixed => "check-paramixed",
            Command::HkrCheck => "hkr-check",
            Command::TraceCheck => "trace-check",
            Command::Corpus => "corpus",
        }
    }
}

/// Computed results and whether every internal verification passed.
pub struct Outcome {
    pub results: Value,
    pub verified: bool,
}

fn ok(results: Value) -> Result<Outcome, InputError> {
    Ok(Outcome { results, verified: true })
}

fn engine<T, E: Into<equihom::Error>>(r: Result<T, E>) -> Result<T, InputError> {
    r.map_err(|e| InputError::Engine(e.into()))
}

fn space_info(x: &GComplex) -> Value {
    json!({
        "group_order": x.group().order(),
        "simplices": x.complex().counts(),
    })
}

fn algebra(kind: AlgebraKind, group: &FiniteGroup, x: &GComplex) -> Result<GAlgebra<Q>, InputError> {
    Ok(match kind {
        AlgebraKind::Functions => engine(GAlgebra::functions_on(x))?,
        AlgebraKind::BaseField => GAlgebra::base_field(group),
        AlgebraKind::Compact => GAlgebra::compact_operators(group),
        AlgebraKind::FunctionsStabilized => {
            let a = engine(GAlgebra::functions_on(x))?;
            engine(GAlgebra::tensor(&a, &GAlgebra::compact_operators(group)))?
        }
    })
}

pub fn run(command: Command, doc: Option<&InputDocument>) -> Result<Outcome, InputError> {
    if command == Command::Corpus {
        return run_corpus();
    }
    let doc = doc.ok_or_else(|| InputError::Syntax(format!("{} needs --input", command.name())))?;
    let group = doc.group()?;
    let x = doc.space(&group)?;
    let opts = &doc.options;
    let form_budget = opts.budget.unwrap_or(DEFAULT_FORM_BUDGET);
    let hom_budget = opts.budget.unwrap_or(DEFAULT_HOM_BUDGET);
    let target = || -> Result<GComplex, InputError> { Ok(doc.target_space(&group)?.unwrap_or_else(|| corpus::point(&group))) };
    match command {
        Command::Bredon => {
            let b = engine(bredon_complex::<Q>(&x))?;
            ok(json!({
                "space": space_info(&x),
                "chain_dims": graded(&b.complex().dims()),
                "homology": graded(&b.homology()),
                "subgroups": b.category.subgroups.len(),
            }))
        }
        Command::Cosheaf => {
            let c = engine(cosheaf_complex::<Q>(&x))?;
            ok(json!({
                "space": space_info(&x),
                "chain_dims": graded(&c.complex().dims()),
                "homology": graded(&c.homology()),
            }))
        }
        Command::CompareBc => {
            let c = engine(compare_bredon_cosheaf::<Q>(&x))?;
            Ok(Outcome {
                verified: c.is_iso() && c.homology_match(),
                results: json!({
                    "space": space_info(&x),
                    "bredon": graded(&c.bredon),
                    "cosheaf": graded(&c.cosheaf),
                    "chain_maps": c.phi_chain_map && c.psi_chain_map,
                    "well_defined": c.well_defined,
                    "psi_phi_identity": c.psi_phi_identity,
                    "phi_psi_identity": c.phi_psi_identity,
                    "is_iso": c.is_iso(),
                    "homology_match": c.homology_match(),
                }),
            })
        }
        Command::Bs => {
            let y = target()?;
            let d = engine(bs_bivariant::<Q>(&x, &y, hom_budget))?;
            let (even, odd) = d.fold_parity();
            ok(json!({
                "source": space_info(&x),
                "target": space_info(&y),
                "degrees": graded(&d),
                "parity": { "even": even, "odd": odd },
            }))
        }
        Command::Deloc => {
            let d = engine(delocalized_point::<Q>(&x))?;
            ok(json!({ "space": space_info(&x), "degrees": graded(&d) }))
        }
        Command::Hp => {
            let y = target()?;
            let a = engine(GAlgebra::<Q>::functions_on(&x))?;
            let b = engine(GAlgebra::<Q>::functions_on(&y))?;
            let levels = opts.levels.unwrap_or((2, 1));
            let run = |strategy| {
                engine(hp_at_level(
                    &a,
                    &b,
                    &HpOptions {
                        levels,
                        stabilize: opts.stabilize,
                        strategy,
                        form_budget,
                        hom_budget,
                    },
                ))
            };
            let lit = run(HpStrategy::Literal)?;
            let red = run(HpStrategy::Reduced)?;
            let per_class: Vec<Value> = lit
                .per_class
                .iter()
                .map(|&(t, e, o)| json!({ "representative": t, "even": e, "odd": o }))
                .collect();
            Ok(Outcome {
                verified: lit == red,
                results: json!({
                    "levels": [levels.0, levels.1],
                    "stabilized": opts.stabilize,
                    "even": lit.even,
                    "odd": lit.odd,
                    "per_class": per_class,
                    "strategies_agree": lit == red,
                }),
            })
        }
        Command::CheckParamixed => {
            let a = algebra(opts.algebra, &group, &x)?;
            let top = opts.max_degree.unwrap_or(2) + 1;
            let f = engine(OmegaForms::new(&a, top, form_budget))?;
            let p = f.check_paramixed();
            let e = f.check_projector();
            Ok(Outcome {
                verified: p.holds() && e.holds(),
                results: json!({
                    "algebra": a.name(),
                    "form_dims": f.dims(),
                    "b_squared_zero": p.b_squared,
                    "big_b_squared_zero": p.big_b_squared,
                    "bb_plus_bb_is_id_minus_t": p.defect_identity,
                    "t_commutes": p.t_commutes,
                    "equivariant": p.equivariant,
                    "projector": {
                        "idempotent": e.idempotent,
                        "absorbs_t": e.absorbs_t,
                        "commutes_with_b": e.commutes_with_b,
                        "commutes_with_big_b": e.commutes_with_big_b,
                        "complement_invertible": e.complement_invertible,
                    },
                }),
            })
        }
        Command::HkrCheck => {
            let r = engine(hkr_check::<Q>(&x, opts.max_degree.unwrap_or(2), form_budget))?;
            Ok(Outcome {
                verified: r.holds(),
                results: json!({
                    "fixed_counts": r.fixed_counts,
                    "expected_h0": r.expected_h0(),
                    "hochschild": r.hochschild,
                    "alpha_rank": r.alpha_rank,
                    "alpha_kills_boundaries": r.alpha_kills_boundaries,
                    "alpha_exact": r.alpha_exact,
                }),
            })
        }
        Command::TraceCheck => {
            let a = algebra(opts.algebra, &group, &x)?;
            let tr = engine(TraceMap::new(&a, opts.max_degree.unwrap_or(2), form_budget))?;
            let r = tr.check();
            Ok(Outcome {
                verified: r.holds(),
                results: json!({
                    "algebra": a.name(),
                    "max_degree": r.top,
                    "stabilized_dims": tr.stabilized.dims(),
                    "plain_dims": tr.plain.dims(),
                    "commutes_with_b": r.commutes_with_b,
                    "commutes_with_big_b": r.commutes_with_big_b,
                    "commutes_with_t": r.commutes_with_t,
                    "equivariant": r.equivariant,
                    "surjective_in_degree_zero": r.surjective_in_degree_zero,
                }),
            })
        }
        Command::Corpus => unreachable!(),
    }
}

fn run_corpus() -> Result<Outcome, InputError> {
    let checks = engine(corpus::run_all())?;
    let mut by_criterion = serde_json::Map::new();
    for c in &checks {
        let e = by_criterion
            .entry(c.criterion.to_string())
            .or_insert_with(|| json!({ "passed": 0, "failed": 0 }));
        let key = if c.passed { "passed" } else { "failed" };
        e[key] = json!(e[key].as_u64().unwrap_or(0) + 1);
    }
    let list: Vec<Value> = checks
        .iter()
        .map(|c| json!({ "criterion": c.criterion, "subject": c.subject, "passed": c.passed, "detail": c.detail }))
        .collect();
    let failed = checks.iter().filter(|c| !c.passed).count();
    Ok(Outcome {
        verified: failed == 0,
        results: json!({
            "checks": list,
            "criteria": by_criterion,
            "total": checks.len(),
            "failed": failed,
        }),
    })
}
