//! One line per acceptance criterion; exits non-zero if any criterion fails.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use crown_core::algebra::{annihilator_grading, cover_injectivity, minimal_points, q_ungraded, reconstruct_graph};
use crown_core::graphs::{graphs_isomorphic, valency2_cycle_count, Crowns, Graph};
use crown_core::harness::{run_suite, CheckName, RunConfig, Status};
use crown_core::loday::{
    functor_check, iso_check, lemma_check, lemma_proof_trace, mutual_inverse_check, transport_square_check,
    CrownAlgebras,
};
use crown_core::monoid::{build_t, build_z, check_t_squared, gen_g, gen_h, homset_target, wn_enumerate, MonoidAlgElem, Sign};
use crown_core::{Caps, Field, FieldSpec, Rational, F2, F5};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

type Verdict = Result<(), String>;
type Criterion = (&'static str, fn() -> Verdict, Duration);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Verdict {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn monoid_identity() -> Verdict {
    fn one_field<F: Field>(name: &str) -> Verdict {
        for n in 1..=6 {
            ensure(check_t_squared::<F>(n, 8).map_err(err)?, || format!("T_{n}^2 != 1 - Z_{n} over {name}"))?;
        }
        Ok(())
    }
    one_field::<Rational>("Q")?;
    one_field::<F2>("F2")?;
    one_field::<F5>("F5")?;
    for n in 1..=6 {
        let size = wn_enumerate(n, 8).map_err(err)?.len();
        ensure(size == 2 * 3usize.pow(n as u32), || format!("|W_{n}| = {size}"))?;
    }
    Ok(())
}

fn suite_passes(n: usize, field: FieldSpec, check: CheckName) -> Verdict {
    let mut config = RunConfig::new(n, field);
    config.checks = [check].into_iter().collect();
    let reports = run_suite(&config).map_err(err)?;
    ensure(reports[0].status == Status::Pass, || {
        format!("{check} at n = {n}: {:?} {}", reports[0].status, reports[0].details)
    })
}

fn strip_schema() -> Verdict {
    for n in 2..=4 {
        suite_passes(n, FieldSpec::PrimeField(2), CheckName::Graphs)?;
    }
    for n in 5..=6 {
        let crowns = Crowns::new(n).map_err(err)?;
        let plus = valency2_cycle_count(crowns.crown(Sign::Plus)).count();
        let minus = valency2_cycle_count(crowns.crown(Sign::Minus)).count();
        ensure((plus, minus) == (2, 1), || format!("cycle counts ({plus}, {minus}) at n = {n}"))?;
    }
    Ok(())
}

fn lemma_for<F: Field>(n: usize, trace: bool) -> Verdict {
    let caps = Caps::default();
    let algs = CrownAlgebras::<F>::new(Crowns::new(n).map_err(err)?);
    for p in 1..n {
        ensure(lemma_check(&algs, p, &caps).map_err(err)?, || format!("Z_{n} nonzero on power {p}"))?;
        if trace {
            let t = lemma_proof_trace(&algs, p, &caps).map_err(err)?;
            ensure(t.passed(), || format!("proof trace n = {n}, p = {p}: {t:?}"))?;
            let d = 18 * n + 4;
            ensure(t.e_rank == d.pow(p as u32), || format!("rank {} != {}", t.e_rank, d.pow(p as u32)))?;
        }
    }
    Ok(())
}

fn lemma() -> Verdict {
    for n in 2..=3 {
        lemma_for::<Rational>(n, true)?;
        lemma_for::<F2>(n, true)?;
    }
    // The optional level, streamed over F_2.
    lemma_for::<F2>(4, false)
}

fn iso_for<F: Field>(n: usize) -> Verdict {
    let caps = Caps::default();
    let algs = CrownAlgebras::<F>::new(Crowns::new(n).map_err(err)?);
    let report = iso_check(&algs, &caps).map_err(err)?;
    ensure(report.passed(), || format!("n = {n}: {report:?}"))?;
    let z = build_z::<F>(n).map_err(err)?;
    let control = mutual_inverse_check(&algs, &z, n - 1, &caps).map_err(err)?;
    ensure(!control.passed(), || format!("negative control passed at n = {n}"))
}

fn isomorphism() -> Verdict {
    iso_for::<Rational>(2)?;
    iso_for::<F2>(3)
}

fn non_isomorphism() -> Verdict {
    for n in 2..=6 {
        let crowns = Crowns::new(n).map_err(err)?;
        let (plus, minus) = (crowns.crown(Sign::Plus), crowns.crown(Sign::Minus));
        ensure(!graphs_isomorphic(plus, minus, 64).map_err(err)?, || format!("C_{n}^+ ~ C_{n}^-"))?;
        let counts = (valency2_cycle_count(plus).count(), valency2_cycle_count(minus).count());
        ensure(counts == (2, 1), || format!("cycle counts {counts:?} at n = {n}"))?;
    }
    let caps = Caps::default();
    let crowns = Crowns::new(2).map_err(err)?;
    let mut rebuilt = Vec::new();
    for s in Sign::BOTH {
        let c = crowns.crown(s);
        let a = q_ungraded::<F2>(c);
        let grading = annihilator_grading(&a).map_err(err)?;
        let r = minimal_points(&grading.graded, caps.max_proj_points).map_err(err)?;
        ensure(r.len() == c.num_vertices(), || format!("|R| = {} for {s}", r.len()))?;
        let g = reconstruct_graph(&a, caps.max_proj_points).map_err(err)?;
        ensure(graphs_isomorphic(&g, c, 64).map_err(err)?, || format!("round trip failed for {s}"))?;
        rebuilt.push(g);
    }
    ensure(!graphs_isomorphic(&rebuilt[0], &rebuilt[1], 64).map_err(err)?, || {
        "reconstructed crowns are isomorphic".into()
    })
}

fn random_graph(rng: &mut StdRng) -> Graph {
    let n = rng.gen_range(1..=6);
    let labels: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(0.5) {
                edges.push((labels[i].clone(), labels[j].clone()));
            }
        }
    }
    Graph::new(labels.clone(), edges).expect("valid random graph")
}

fn functor_and_covers() -> Verdict {
    let caps = Caps::default();
    let mut rng = StdRng::seed_from_u64(20);
    for k in 0..20 {
        let g = random_graph(&mut rng);
        let check = functor_check(&q_ungraded::<F5>(&g), 3, &caps).map_err(err)?;
        ensure(check.passed(), || format!("graph {k}: {:?}", check.failure))?;
    }
    for n in 2..=3 {
        let crowns = Crowns::new(n).map_err(err)?;
        ensure(cover_injectivity::<Rational>(crowns.pieces()).map_err(err)?, || format!("pieces at n = {n}"))?;
        for s in Sign::BOTH {
            let f = std::slice::from_ref(crowns.projection(s));
            ensure(cover_injectivity::<Rational>(f).map_err(err)?, || format!("f_{n}^{s}"))?;
        }
    }
    Ok(())
}

fn transport() -> Verdict {
    let caps = Caps::default();
    let n = 2;
    let algs = CrownAlgebras::<Rational>::new(Crowns::new(n).map_err(err)?);
    let mut elements = vec![("1".to_string(), MonoidAlgElem::one(n))];
    for i in 1..=n {
        elements.push((format!("g{i}"), MonoidAlgElem::basis(gen_g(n, i).map_err(err)?)));
        elements.push((format!("h{i}"), MonoidAlgElem::basis(gen_h(n, i).map_err(err)?)));
    }
    elements.push(("T".into(), build_t(n).map_err(err)?));
    elements.push(("Z".into(), build_z(n).map_err(err)?));
    for (name, x) in &elements {
        for s in Sign::BOTH {
            let t = homset_target(x, s).ok_or_else(|| format!("{name} has no target from {s}"))?;
            ensure(transport_square_check(&algs, 1, x, s, t, &caps).map_err(err)?, || {
                format!("square for {name} from {s}")
            })?;
        }
    }
    Ok(())
}

fn determinism() -> Verdict {
    let dir = tempfile::tempdir().map_err(err)?;
    let run = |name: &str| -> Result<String, String> {
        let path = dir.path().join(name);
        let status = Command::new(env!("CARGO_BIN_EXE_crown"))
            .args(["verify", "--n", "2", "--checks", "all", "--json"])
            .arg(&path)
            .output()
            .map_err(err)?;
        ensure(status.status.success(), || format!("exit status {}", status.status))?;
        let text = std::fs::read_to_string(&path).map_err(err)?;
        Ok(text.lines().filter(|l| !l.contains("\"elapsed_ms\"")).collect::<Vec<_>>().join("\n"))
    };
    let first = run("a.json")?;
    let second = run("b.json")?;
    ensure(first == second, || "reports differ".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("monoid identity", monoid_identity, Duration::from_secs(5)),
        ("strip schema suite", strip_schema, Duration::from_secs(30)),
        ("lemma", lemma, Duration::from_secs(600)),
        ("isomorphism", isomorphism, Duration::from_secs(300)),
        ("non-isomorphism", non_isomorphism, Duration::from_secs(120)),
        ("functor and covers", functor_and_covers, Duration::from_secs(120)),
        ("transport squares", transport, Duration::from_secs(60)),
        ("determinism", determinism, Duration::from_secs(60)),
    ];
    let mut failed = 0;
    for (k, (name, f, budget)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let mut verdict = f();
        let elapsed = start.elapsed();
        if verdict.is_ok() && elapsed > *budget {
            verdict = Err(format!("over budget of {} s", budget.as_secs()));
        }
        match verdict {
            Ok(()) => println!("ACCEPTANCE {} {name}: PASS ({:.2} s)", k + 1, elapsed.as_secs_f64()),
            Err(e) => {
                failed += 1;
                println!("ACCEPTANCE {} {name}: FAIL ({:.2} s): {e}", k + 1, elapsed.as_secs_f64());
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
