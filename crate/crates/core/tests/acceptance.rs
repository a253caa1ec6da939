//! One PASS/FAIL line per acceptance criterion. All comparisons are exact
//! equalities over the rationals (tolerance 0).

use std::process::ExitCode;
use std::time::Instant;

use num_bigint::BigInt;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use prelie::checks::{
    coalgebra_suite, decomposition_dims, dlaw_suite, fundamental_suite, nap_suite, operads_suite, prelie_suite,
    ak_suite, CheckReport,
};
use prelie::presented::{PresentedAlgebra, ValidationFailure};
use prelie::reconstruct::reconstruct;
use prelie::rigidity::factorial;
use prelie::tree::{enumerate_heap_ordered, enumerate_labeled, enumerate_trees};
use prelie::linear::integer;
use prelie::{FreePreLie, Label, Tensor};

const SEED: u64 = 20;

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome);

fn all_pass(reports: &[CheckReport]) -> Outcome {
    match reports.iter().find(|r| !r.passed()) {
        None => Ok(()),
        Some(r) => Err(r.to_string()),
    }
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn prelie_relation() -> Outcome {
    all_pass(&prelie_suite(6, SEED))
}

fn nap_relations() -> Outcome {
    all_pass(&nap_suite(6, SEED))?;
    all_pass(&coalgebra_suite(6, SEED))
}

fn distributive_law() -> Outcome {
    all_pass(&dlaw_suite(6, SEED))
}

fn projector() -> Outcome {
    all_pass(&fundamental_suite(6, SEED))
}

fn decomposition() -> Outcome {
    let a = Label::new("a").map_err(|e| e.to_string())?;
    let alg = FreePreLie::new(vec![a.clone()]);
    let expected_prim = [1, 0, 0, 0, 0, 0];
    for n in 1..=6 {
        let enumerated = enumerate_trees(std::slice::from_ref(&a), n).map_err(|e| e.to_string())?.len();
        let d = decomposition_dims(&alg, n);
        ensure(
            d.total == enumerated
                && d.primitive == expected_prim[n - 1]
                && d.primitive + d.decomposable == d.total
                && d.sum == d.total,
            || format!("degree {n}: {d:?}, {enumerated} trees enumerated"),
        )?;
    }
    let dims: Vec<usize> = (1..=6).map(|n| decomposition_dims(&alg, n).total).collect();
    ensure(dims == [1, 1, 2, 4, 9, 20], || format!("dims {dims:?}"))
}

fn ak_identities() -> Outcome {
    all_pass(&ak_suite(6, SEED))
}

fn operads() -> Outcome {
    all_pass(&operads_suite(5, SEED).map_err(|e| e.to_string())?)
}

fn reconstruction() -> Outcome {
    let a = Label::new("a").map_err(|e| e.to_string())?;
    let (alg, _) = PresentedAlgebra::from_free(&FreePreLie::new(vec![a]), 5).map_err(|e| e.to_string())?;

    let report = reconstruct(&alg.clone().validate().map_err(|e| e.to_string())?, 5).map_err(|e| e.to_string())?;
    ensure(report.is_isomorphism() && report.dims() == [1, 1, 2, 4, 9], || report.to_string())?;

    let shuffled = alg.change_basis(&mut ChaCha8Rng::seed_from_u64(SEED));
    let report = reconstruct(&shuffled.validate().map_err(|e| e.to_string())?, 5).map_err(|e| e.to_string())?;
    ensure(report.is_isomorphism() && report.dims() == [1, 1, 2, 4, 9], || format!("after change of basis: {report}"))?;

    // doubling Δ of the degree-2 tree breaks Δ(a∘b) = a⊗b + Δ(a)∘b
    let t1 = Label::new("t1_1").map_err(|e| e.to_string())?;
    let t2 = Label::new("t2_1").map_err(|e| e.to_string())?;
    let perturbed = alg.with_coproduct(&t2, Tensor::pure(vec![t1.clone(), t1]).scale(&integer(2)));
    match perturbed.validate() {
        Err(ValidationFailure::DistributiveLaw(..)) => Ok(()),
        Err(other) => Err(format!("perturbed structure rejected for the wrong reason: {other}")),
        Ok(_) => Err("perturbed structure accepted".into()),
    }
}

fn heap_consistency() -> Outcome {
    let reports = ak_suite(5, SEED);
    all_pass(&reports[reports.len() - 2..])?;
    for k in 1..=7 {
        let found = enumerate_heap_ordered(k).map_err(|e| e.to_string())?.len();
        ensure(BigInt::from(found) == factorial(k - 1), || format!("|HO({k})| = {found}"))?;
    }
    for n in 1..=6usize {
        let found = enumerate_labeled(n).map_err(|e| e.to_string())?.len();
        ensure(found == n.pow(n as u32 - 1), || format!("{found} labeled trees on {n} vertices"))?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("pre-Lie relation on all triples (1 generator ≤ 6, 2 generators ≤ 5)", prelie_relation),
        ("NAP relation, NAP coalgebra relation, Δ^k invariance", nap_relations),
        ("distributive law and its iterate (degree ≤ 6, k ≤ 4)", distributive_law),
        ("Δ∘e = 0, e∘e = e, e∘μ = 0 (degree ≤ 6, alphabets of size 1 and 2)", projector),
        ("H = e(H) ⊕ μ(H⊗H), dims 1,1,2,4,9,20 and primitives 1,0,0,0,0,0", decomposition),
        ("A_k, derivation and split-action identities", ak_identities),
        ("operad axioms, NAP presentation, evaluation", operads),
        ("reconstruction of RT({a}) to degree 5, change of basis, perturbed Δ rejected", reconstruction),
        ("c(U) expansion of A_k (k ≤ 5), |HO(k)| = (k-1)!, n^(n-1) labeled trees", heap_consistency),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(()) => println!("PASS {} {name} [tolerance 0, {secs:.1}s]", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {} {name} [tolerance 0, {secs:.1}s]: {why}", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
