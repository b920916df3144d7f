//! Acceptance run: one line per criterion, exit status 1 if any fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use kappa_iso::basis::{lightcone_decompose, orthogonal_decompose};
use kappa_iso::config::{non_diagonal_lorentzian, RunConfig};
use kappa_iso::hopf::CoproductDefect;
use kappa_iso::lie::StructurePerturbation;
use kappa_iso::majid_ruegg::verify_mr;
use kappa_iso::minkowski::verify_covariance;
use kappa_iso::scalar::{int, rat, GaussRational, Rational};
use kappa_iso::twist::{lc_structure_check, verify_twist};
use kappa_iso::{
    omega, r_matrix, schouten_square, Algebra, AlgebraElement, DeformationContext, HSeries, Metric, Placement,
    TensorElement, VectorTau, VerificationReport,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn tau_of(g: &Metric, t: &[i64]) -> VectorTau {
    VectorTau::from_ints(g, t).expect("valid τ")
}

fn report_failures(label: &str, r: &VerificationReport) -> Option<String> {
    if r.passed() {
        return None;
    }
    let names: Vec<String> = r
        .failures()
        .map(|c| match &c.residual {
            Some(res) => format!("{} ({})", c.name, truncate(&res.to_string())),
            None => c.name.clone(),
        })
        .collect();
    Some(format!("{label}: {}", names.join("; ")))
}

fn truncate(s: &str) -> String {
    if s.chars().count() > 160 {
        format!("{}…", s.chars().take(160).collect::<String>())
    } else {
        s.to_string()
    }
}

fn require(report: &VerificationReport, names: &[&str]) -> Result<(), String> {
    for n in names {
        if report.check(n).is_none() {
            return Err(format!("suite {} has no check {n}", report.suite));
        }
    }
    Ok(())
}

fn collect(failures: Vec<String>, ok: String) -> Outcome {
    if failures.is_empty() {
        Ok(ok)
    } else {
        Err(failures.join("\n"))
    }
}

/// The Lorentzian example vectors in dimension `d`: `e_0`, `e_{d−1}` and
/// their sum.
fn lorentzian_vectors(d: usize) -> Vec<Vec<i64>> {
    let unit = |j: usize| (0..d).map(|i| i64::from(i == j)).collect::<Vec<_>>();
    let mut null = unit(0);
    null[d - 1] = 1;
    vec![unit(0), unit(d - 1), null]
}

fn random_rational(rng: &mut ChaCha8Rng) -> Rational {
    rat(rng.gen_range(-5..=5), rng.gen_range(1..=4))
}

fn random_metric(rng: &mut ChaCha8Rng, d: usize) -> Metric {
    loop {
        let mut m = vec![vec![int(0); d]; d];
        for i in 0..d {
            for j in i..d {
                let x = random_rational(rng);
                m[i][j] = x.clone();
                m[j][i] = x;
            }
        }
        if let Ok(g) = Metric::new(m) {
            return g;
        }
    }
}

fn random_tau(rng: &mut ChaCha8Rng, g: &Metric) -> VectorTau {
    loop {
        let t: Vec<Rational> = (0..g.dim()).map(|_| random_rational(rng)).collect();
        let tau = VectorTau::new(g, t).expect("dimension matches");
        if !tau.is_zero() {
            return tau;
        }
    }
}

/// `[r₁₂, r₁₃] + [r₁₂, r₂₃] + [r₁₃, r₂₃]` through products in the threefold
/// tensor power of the enveloping algebra.
fn yang_baxter_by_products(r: &TensorElement) -> TensorElement {
    let e = |p| r.embed(p).expect("two legs");
    let (r12, r13, r23) = (e(Placement::L12), e(Placement::L13), e(Placement::L23));
    let br = |a: &TensorElement, b: &TensorElement| &(a * b) - &(b * a);
    &(&br(&r12, &r13) + &br(&r12, &r23)) + &br(&r13, &r23)
}

fn criterion_schouten() -> Outcome {
    let mut cases: Vec<(String, Metric, VectorTau)> = Vec::new();
    for d in 2..=4 {
        let g = Metric::minkowski(d);
        for t in lorentzian_vectors(d) {
            cases.push((format!("η D={d} τ={t:?}"), g.clone(), tau_of(&g, &t)));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5c40_07e4);
    for k in 0..20 {
        let d = rng.gen_range(2..=4);
        let g = random_metric(&mut rng, d);
        let tau = random_tau(&mut rng, &g);
        cases.push((format!("random #{k} D={d}"), g, tau));
    }
    let mut failures = Vec::new();
    for (label, g, tau) in &cases {
        let alg = Algebra::new(g.clone());
        let r = r_matrix(&alg, tau).map_err(|e| e.to_string())?;
        let target = omega(&alg).scale(&GaussRational::real(-tau.square()));
        let lhs = schouten_square(&r).map_err(|e| e.to_string())?;
        if lhs != target {
            failures.push(format!("{label}: [[r,r]] + τ²Ω = {}", truncate(&lhs.to_string())));
        }
        // Independent route: the Yang-Baxter combination computed in U⊗U⊗U.
        let cyb = yang_baxter_by_products(&r.to_tensor(0));
        let via_products = cyb.scale(&GaussRational::new(int(0), int(-2)));
        if via_products != target.to_tensor(0) {
            failures.push(format!("{label}: tensor-product route disagrees"));
        }
    }
    collect(failures, format!("{} metric/τ pairs", cases.len()))
}

fn hopf_contexts() -> Vec<(String, Metric, Vec<i64>)> {
    let eta = Metric::minkowski(4);
    let mut v: Vec<(String, Metric, Vec<i64>)> = vec![
        ("η time-like".into(), eta.clone(), vec![1, 0, 0, 0]),
        ("η space-like".into(), eta.clone(), vec![0, 0, 0, 1]),
        ("η light-like".into(), eta, vec![1, 0, 0, 1]),
        ("non-diagonal Lorentzian".into(), non_diagonal_lorentzian(), vec![1, 0, 0, 0]),
        ("Kleinian".into(), Metric::diagonal(&[1, -1, 1, -1]).unwrap(), vec![1, 1, 1, 1]),
    ];
    for d in [2, 3] {
        for t in lorentzian_vectors(d) {
            v.push((format!("η D={d} τ={t:?}"), Metric::minkowski(d), t));
        }
    }
    v
}

fn criterion_hopf(contexts: &mut Vec<(String, DeformationContext)>) -> Outcome {
    let mut failures = Vec::new();
    for order in [3, 4] {
        for (label, g, t) in hopf_contexts() {
            let ctx = DeformationContext::from_ints(g, &t, order).map_err(|e| e.to_string())?;
            let label = format!("{label} N={order}");
            let report = ctx.verify_hopf();
            require(&report, &["homomorphism", "coassociativity", "counit", "antipode", "antipode-square"])?;
            failures.extend(report_failures(&label, &report));
            contexts.push((label, ctx));
        }
    }
    collect(failures, format!("{} contexts", contexts.len()))
}

fn primitive(x: &AlgebraElement) -> TensorElement {
    let one = AlgebraElement::one(x.algebra(), x.order());
    &TensorElement::pair(x, &one) + &TensorElement::pair(&one, x)
}

fn criterion_classical_limit(contexts: &[(String, DeformationContext)]) -> Outcome {
    let mut failures = Vec::new();
    let mut checked = 0;
    for (label, ctx) in contexts {
        let r = r_matrix(ctx.algebra(), ctx.tau()).map_err(|e| e.to_string())?.to_tensor(0);
        for &g in ctx.algebra().basis().generators() {
            let delta = ctx.coproduct(g).map_err(|e| e.to_string())?;
            let first = (&delta - &delta.flip()).h_coefficient(1).with_order(0).scale(&GaussRational::i());
            let d0 = primitive(&AlgebraElement::generator(ctx.algebra(), g, 0).unwrap());
            let cobracket = &(&d0 * &r) - &(&r * &d0);
            if first != cobracket {
                failures.push(format!("{label}: {g}"));
            }
            checked += 1;
        }
    }
    collect(failures, format!("{checked} generator coproducts"))
}

fn criterion_rescaling() -> Outcome {
    let g = Metric::minkowski(4);
    let mut failures = Vec::new();
    for (label, t) in [("time-like", [1, 0, 0, 0]), ("space-like", [0, 0, 0, 1])] {
        let ctx = DeformationContext::from_ints(g.clone(), &t, 4).map_err(|e| e.to_string())?;
        for s in [2i64, -3] {
            let scaled_tau: Vec<Rational> = t.iter().map(|&x| int(x * s)).collect();
            let scaled = DeformationContext::new(g.clone(), scaled_tau, 4).map_err(|e| e.to_string())?;
            for &x in ctx.algebra().basis().generators() {
                let back = scaled.coproduct(x).unwrap().rescale_h(&rat(1, s));
                if back != ctx.coproduct(x).unwrap() {
                    failures.push(format!("{label}, s = {s}: {x}"));
                }
            }
        }
    }
    collect(failures, "s ∈ {2, −3}, time-like and space-like, N=4".into())
}

fn criterion_majid_ruegg() -> Outcome {
    let g = Metric::minkowski(4);
    let mut failures = Vec::new();
    for (label, t) in [("time-like", [1, 0, 0, 0]), ("space-like", [0, 0, 0, 1])] {
        let tau = tau_of(&g, &t);
        let basis = orthogonal_decompose(&g, &tau).map_err(|e| e.to_string())?;
        let ctx = basis.adapted_context(&tau, 4).map_err(|e| e.to_string())?;
        let report = verify_mr(&ctx).map_err(|e| e.to_string())?;
        require(&report, &["mr-momentum", "mr-boost", "mr-boost-momentum", "mr-ptau-primitive"])?;
        failures.extend(report_failures(label, &report));
    }
    collect(failures, "time-like and space-like, N=4".into())
}

fn criterion_twist() -> Outcome {
    let mut failures = Vec::new();
    let cases = [
        ("Lorentzian", Metric::minkowski(4), [1, 0, 0, 1]),
        ("Kleinian", Metric::diagonal(&[1, -1, 1, -1]).unwrap(), [1, 1, 1, 1]),
    ];
    for (label, g, t) in cases {
        let tau = tau_of(&g, &t);
        let basis = lightcone_decompose(&g, &tau).map_err(|e| e.to_string())?;
        let ctx = basis.adapted_context(&tau, 3).map_err(|e| e.to_string())?;
        let mut report = verify_twist(&ctx).map_err(|e| e.to_string())?;
        require(
            &report,
            &[
                "cocycle",
                "factorizations",
                "triangularity",
                "quantum-yang-baxter",
                "reduced-coproducts",
                "twisted-coproduct",
                "r-intertwines",
            ],
        )?;
        report.merge(lc_structure_check(&g, &tau).map_err(|e| e.to_string())?);
        failures.extend(report_failures(label, &report));
    }
    collect(failures, "Lorentzian and Kleinian, N=3".into())
}

fn criterion_minkowski() -> Outcome {
    let g = Metric::minkowski(4);
    let mut failures = Vec::new();
    for (label, t) in [("time-like", [1, 0, 0, 0]), ("light-like", [1, 0, 0, 1])] {
        let ctx = DeformationContext::from_ints(g.clone(), &t, 3).map_err(|e| e.to_string())?;
        let report = verify_covariance(&ctx, 3);
        require(&report, &["relation-covariance", "module-axiom", "leibniz"])?;
        failures.extend(report_failures(label, &report));
    }
    collect(failures, "time-like and light-like, degree ≤ 3, N=3".into())
}

fn criterion_consistency() -> Outcome {
    let mut failures = Vec::new();
    let names = ["time-like", "tachyonic", "light-like", "kleinian", "non-diagonal-lorentzian"];
    for name in names {
        let cfg = RunConfig::builtin(name).map_err(|e| e.to_string())?;
        let ctx = DeformationContext::new(cfg.metric.clone(), cfg.tau.components().to_vec(), 4)
            .map_err(|e| e.to_string())?;
        let report = ctx.verify_consistency();
        require(&report, &["pi-inverse-routes", "casimir-inversion", "auxiliary-identity", "counit-pi", "antipode-pi"])?;
        failures.extend(report_failures(name, &report));
        // Series inversion of Π_τ as a third route to Π_τ⁻¹.
        match ctx.pi_tau().invert() {
            Ok(inv) if &inv == ctx.pi_tau_inv() => {}
            _ => failures.push(format!("{name}: series inverse of Π_τ differs")),
        }
    }
    collect(failures, format!("{} built-in contexts, N=4", names.len()))
}

/// Does any check of the Hopf or consistency suites fail?
fn detected(ctx: &DeformationContext) -> bool {
    !ctx.verify_hopf().passed() || !ctx.verify_consistency().passed()
}

fn criterion_negative_controls() -> Outcome {
    let mut missed = Vec::new();
    let mut structure = 0;
    for d in [2, 3] {
        let g = Metric::minkowski(d);
        let t = lorentzian_vectors(d)[0].clone();
        let gens = Algebra::new(g.clone()).basis().generators().to_vec();
        for (i, &x) in gens.iter().enumerate() {
            for &y in &gens[i + 1..] {
                for &target in &gens {
                    let p = StructurePerturbation { x, y, target, delta: GaussRational::one() };
                    let alg = Algebra::perturbed(g.clone(), p).map_err(|e| e.to_string())?;
                    let ctx = DeformationContext::with_algebra(&alg, tau_of(&g, &t), 2).map_err(|e| e.to_string())?;
                    structure += 1;
                    if !detected(&ctx) {
                        missed.push(format!("D={d}: [{x}, {y}] += {target}"));
                    }
                }
            }
        }
    }
    let mut coproduct = 0;
    let order = 2;
    for t in [[1, 0], [1, 1]] {
        let ctx = DeformationContext::from_ints(Metric::minkowski(2), &t, order).map_err(|e| e.to_string())?;
        for &x in ctx.algebra().basis().generators() {
            let delta = ctx.coproduct(x).unwrap();
            for (key, _) in delta.terms() {
                for k in 0..=order {
                    let defect = CoproductDefect {
                        generator: x,
                        key: key.clone(),
                        delta: HSeries::monomial(GaussRational::one(), k, order),
                    };
                    let bad = ctx.with_coproduct_defect(&defect).map_err(|e| e.to_string())?;
                    coproduct += 1;
                    if !detected(&bad) {
                        missed.push(format!("τ={t:?}: Δ({x}) coefficient of {} at h^{k}", delta.key_string(key)));
                    }
                }
            }
        }
    }
    if missed.is_empty() {
        Ok(format!("{structure} structure-constant and {coproduct} coproduct perturbations all detected"))
    } else {
        Err(format!("{} undetected:\n{}", missed.len(), missed.join("\n")))
    }
}

fn run(id: usize, title: &str, f: impl FnOnce() -> Outcome) -> bool {
    let start = Instant::now();
    let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|e| {
        let msg = e
            .downcast_ref::<String>()
            .cloned()
            .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
            .unwrap_or_default();
        Err(format!("panicked: {msg}"))
    });
    let elapsed = start.elapsed();
    match outcome {
        Ok(detail) => {
            println!("criterion {id}: PASS  {title} [{detail}] ({})", seconds(elapsed));
            true
        }
        Err(detail) => {
            println!("criterion {id}: FAIL  {title} ({})", seconds(elapsed));
            for line in detail.lines() {
                println!("    {line}");
            }
            false
        }
    }
}

fn seconds(d: Duration) -> String {
    format!("{:.2}s", d.as_secs_f64())
}

fn main() {
    let mut contexts = Vec::new();
    let results = [
        run(1, "Schouten identity [[r,r]] = −τ²Ω", criterion_schouten),
        run(2, "Hopf axioms at N=3 and N=4", || criterion_hopf(&mut contexts)),
        run(3, "classical limit of Δ − Δ^op", || criterion_classical_limit(&contexts)),
        run(4, "rescaling τ → sτ, h → h/s", criterion_rescaling),
        run(5, "Majid-Ruegg basis", criterion_majid_ruegg),
        run(6, "light-cone basis and twist", criterion_twist),
        run(7, "κ-Minkowski covariance", criterion_minkowski),
        run(8, "internal consistency", criterion_consistency),
        run(9, "negative controls", criterion_negative_controls),
    ];
    let passed = results.iter().filter(|&&p| p).count();
    println!("acceptance: {passed}/{} criteria passed", results.len());
    if passed != results.len() {
        std::process::exit(1);
    }
}
