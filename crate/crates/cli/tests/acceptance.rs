//! End-to-end acceptance run. Prints one `[PASS]`/`[FAIL]` line per
//! criterion and exits nonzero if any of them fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use galcar_cli::{cmd_table, TableArgs};
use galcar_core::fields::{transform_fields, VectorCalculus};
use galcar_core::verify::{
    exceptional_square_signs, random_adapted_change, random_field, random_invertible,
    random_matching_map, random_polynomial, random_solution, rng_from_seed,
};
use galcar_core::{
    extract_equations, pullback_form, pullback_structure, star_closed, star_oracle,
    vector_calculus, EquationSet, Form, FrameChange, MultiIndex, Polynomial, Rational,
    SpacetimeKind, SpacetimeStructure, StarVariant, Tag,
};

type R = Rational;
type Outcome = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

const KINDS: [SpacetimeKind; 3] = [
    SpacetimeKind::Minkowski,
    SpacetimeKind::Galilean,
    SpacetimeKind::Carrollian,
];

fn canonical(kind: SpacetimeKind, d: usize) -> SpacetimeStructure<R> {
    SpacetimeStructure::canonical(kind, d - 1).unwrap()
}

fn basis(d: usize) -> impl Iterator<Item = Form<R>> {
    MultiIndex::all(d).into_iter().map(move |m| Form::basis(d, m))
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(elapsed: Duration, limit: Duration) -> Result<(), String> {
    ensure(elapsed <= limit, || format!("took {elapsed:.2?}, budget {limit:.0?}"))
}

fn golden_tables() -> Outcome {
    let start = Instant::now();
    let expected = [
        ("minkowski", include_str!("golden/table_minkowski.txt")),
        ("galilei", include_str!("golden/table_galilei.txt")),
        ("carroll", include_str!("golden/table_carroll.txt")),
    ];
    let mut formulas = 0;
    for (kind, golden) in expected {
        let out = cmd_table(&TableArgs {
            kind: kind.to_string(),
            json: false,
        });
        ensure(out.code == 0, || format!("table {kind} exited {}", out.code))?;
        for (got, want) in out.stdout.lines().zip(golden.lines()).skip(1) {
            ensure(got == want, || format!("{kind}: `{got}` != `{want}`"))?;
            formulas += 1;
        }
        ensure(out.stdout == golden, || format!("{kind}: output differs from golden file"))?;
    }
    ensure(formulas == 15, || format!("{formulas} formulas compared"))?;
    within(start.elapsed(), Duration::from_secs(1))?;
    Ok(format!("{formulas} formulas"))
}

fn oracle_equivalence() -> Outcome {
    let start = Instant::now();
    let mut cases = 0;
    for d in 2..=6 {
        for kind in KINDS {
            let s = canonical(kind, d);
            for variant in StarVariant::for_kind(kind, d) {
                for a in basis(d) {
                    let closed = star_closed(&a, &s, variant).map_err(|e| e.to_string())?;
                    let oracle = star_oracle(&a, &s, variant).map_err(|e| e.to_string())?;
                    ensure(closed == oracle, || format!("{variant} on {a:?} at d = {d}"))?;
                    cases += 1;
                }
            }
        }
    }
    within(start.elapsed(), Duration::from_secs(30))?;
    Ok(format!("{cases} basis forms, 0 discrepancies"))
}

fn nilpotency() -> Outcome {
    let mut cases = 0;
    for d in 2..=6 {
        for (kind, variant) in [
            (SpacetimeKind::Galilean, StarVariant::GalileanH),
            (SpacetimeKind::Carrollian, StarVariant::CarrollianH),
        ] {
            let s = canonical(kind, d);
            for a in basis(d).filter(|a| a.degree() != 0 && a.degree() != d) {
                let once = star_closed(&a, &s, variant).map_err(|e| e.to_string())?;
                let twice = star_closed(&once, &s, variant).map_err(|e| e.to_string())?;
                ensure(twice.is_zero(), || format!("{variant} ** {a:?} = {twice:?}"))?;
                cases += 1;
            }
        }
    }
    Ok(format!("{cases} basis forms"))
}

fn exceptional_involution() -> Outcome {
    let mut log = Vec::new();
    for kind in [SpacetimeKind::Galilean, SpacetimeKind::Carrollian] {
        let mut signs = Vec::new();
        for d in 2..=6 {
            let pair = exceptional_square_signs(kind, d, false).map_err(|e| e.to_string())?;
            let sign = match pair {
                (Some(a), Some(b)) if a == b => a,
                other => return Err(format!("{kind} d = {d}: composite {other:?}")),
            };
            // Galilean composite is +1, Carrollian alternates as (-1)^n
            let expected = match kind {
                SpacetimeKind::Carrollian if (d - 1) % 2 == 1 => -1,
                _ => 1,
            };
            ensure(sign == expected, || format!("{kind} d = {d}: sign {sign}"))?;
            signs.push(format!("{sign:+}"));
        }
        log.push(format!("{kind} {}", signs.join(",")));
    }
    Ok(log.join("; "))
}

fn kernels() -> Outcome {
    let mut cases = 0;
    for d in 2..=6 {
        let n = d - 1;
        let gal = canonical(SpacetimeKind::Galilean, d);
        let car = canonical(SpacetimeKind::Carrollian, d);
        for m in MultiIndex::all(d) {
            let a = Form::<R>::basis(d, m);
            let mut targets = Vec::new();
            if m.contains(0) && m.degree() - 1 != n {
                targets.push((&gal, StarVariant::GalileanH));
                targets.push((&gal, StarVariant::GalileanK));
            }
            if m.is_spatial() && m.degree() != 0 {
                targets.push((&car, StarVariant::CarrollianH));
                targets.push((&car, StarVariant::CarrollianK));
            }
            for (s, variant) in targets {
                let img = star_closed(&a, s, variant).map_err(|e| e.to_string())?;
                ensure(img.is_zero(), || format!("{variant} {a:?} = {img:?}"))?;
                cases += 1;
            }
        }
    }
    Ok(format!("{cases} basis forms"))
}

fn coincidences() -> Outcome {
    let mut cases = 0;
    for d in 2..=6 {
        let n = d - 1;
        let gal = canonical(SpacetimeKind::Galilean, d);
        let car = canonical(SpacetimeKind::Carrollian, d);
        for a in basis(d) {
            let pairs = [
                (a.degree() == n, &gal, StarVariant::GalileanH, StarVariant::GalileanK),
                (a.degree() == 1, &car, StarVariant::CarrollianH, StarVariant::CarrollianK),
            ];
            for (applies, s, h, k) in pairs {
                if applies {
                    let hs = star_closed(&a, s, h).map_err(|e| e.to_string())?;
                    let ks = star_closed(&a, s, k).map_err(|e| e.to_string())?;
                    ensure(hs == ks, || format!("{h} != {k} on {a:?}"))?;
                    cases += 1;
                }
            }
        }
    }
    Ok(format!("{cases} basis forms"))
}

fn adapted_changes() -> Vec<(SpacetimeKind, FrameChange<R>)> {
    let mut rng = rng_from_seed(2024);
    let mut out = Vec::new();
    for kind in [SpacetimeKind::Galilean, SpacetimeKind::Carrollian] {
        for _ in 0..200 {
            out.push((kind, random_adapted_change(&mut rng, kind, 3)));
        }
    }
    out
}

fn invariance(changes: &[(SpacetimeKind, FrameChange<R>)]) -> Outcome {
    let mut cases = 0;
    for (kind, change) in changes {
        let s = canonical(*kind, 4);
        for variant in StarVariant::for_kind(*kind, 4) {
            for a in basis(4) {
                let star = |f: &Form<R>| star_closed(f, &s, variant).map_err(|e| e.to_string());
                let pull = |f: &Form<R>| pullback_form(f, change).map_err(|e| e.to_string());
                let left = star(&pull(&a)?)?;
                let right = pull(&star(&a)?)?;
                ensure(left == right, || format!("{variant} on {a:?} under {change:?}"))?;
                cases += 1;
            }
        }
    }
    Ok(format!("{} frame changes, {cases} checks", changes.len()))
}

fn naturality() -> Outcome {
    let mut rng = rng_from_seed(77);
    let mut cases = 0;
    for i in 0..50 {
        let d = 2 + i % 3;
        let kind = KINDS[i % 3];
        let change = random_invertible(&mut rng, d);
        let s = canonical(kind, d);
        let moved = pullback_structure(&s, &change).map_err(|e| e.to_string())?;
        for variant in StarVariant::for_kind(kind, d) {
            for a in basis(d) {
                let pull = |f: &Form<R>| pullback_form(f, &change).map_err(|e| e.to_string());
                let left = pull(&star_oracle(&a, &s, variant).map_err(|e| e.to_string())?)?;
                let right =
                    star_oracle(&pull(&a)?, &moved, variant).map_err(|e| e.to_string())?;
                ensure(left == right, || format!("{variant} on {a:?}, d = {d}"))?;
                cases += 1;
            }
        }
    }
    Ok(format!("50 matrices, {cases} checks"))
}

/// Residual sets assembled directly from div, curl and time derivatives.
fn expected_residuals(kind: SpacetimeKind, vc: &VectorCalculus<R>) -> Vec<(Tag, Vec<Polynomial<R>>)> {
    let ampere: Vec<_> = (0..3).map(|i| &vc.curl_b[i] - &vc.dt_e[i]).collect();
    let faraday: Vec<_> = (0..3).map(|i| &vc.curl_e[i] + &vc.dt_b[i]).collect();
    let mut out = match kind {
        SpacetimeKind::Minkowski => vec![
            (Tag::Gauss, vec![vc.div_e.clone()]),
            (Tag::Ampere, ampere),
        ],
        SpacetimeKind::Galilean => vec![(Tag::Ampere, vc.curl_b.to_vec())],
        SpacetimeKind::Carrollian => vec![
            (Tag::Gauss, vec![vc.div_e.clone()]),
            (Tag::TimeConstancy, vc.dt_e.iter().map(|p| -p).collect()),
        ],
    };
    out.push((Tag::Faraday, faraday));
    out.push((Tag::NoMonopole, vec![vc.div_b.clone()]));
    out
}

fn as_pairs(eqs: &EquationSet<R>) -> Vec<(Tag, Vec<Polynomial<R>>)> {
    eqs.residuals
        .iter()
        .map(|r| (r.tag, r.components.clone()))
        .collect()
}

fn electrodynamics() -> Outcome {
    let start = Instant::now();
    let mut rng = rng_from_seed(9);
    for i in 0..100 {
        let e = random_field(&mut rng, 3);
        let b = random_field(&mut rng, 3);
        let vc = vector_calculus(&e, &b);
        let mut homogeneous = Vec::new();
        for kind in KINDS {
            let eqs = extract_equations(&e, &b, kind).map_err(|err| err.to_string())?;
            let got = as_pairs(&eqs);
            ensure(got == expected_residuals(kind, &vc), || {
                format!("pair {i}, {kind}: {:?}", eqs.to_report())
            })?;
            homogeneous.push(got[got.len() - 2..].to_vec());
        }
        ensure(homogeneous.windows(2).all(|w| w[0] == w[1]), || {
            format!("pair {i}: dF residuals depend on the kind")
        })?;
    }
    within(start.elapsed(), Duration::from_secs(10))?;
    Ok("100 field pairs, 3 kinds".to_string())
}

fn structural_absences() -> Outcome {
    let mut rng = rng_from_seed(31);
    for _ in 0..20 {
        let e = random_field(&mut rng, 3);
        let b = random_field(&mut rng, 3);
        // perturbations that only change dt E, and only change curl B
        let t = Polynomial::<R>::var(4, 0);
        let bump = [0, 1, 2].map(|_| &t * &random_polynomial(&mut rng, 4, 2));
        let e_bumped = [0, 1, 2].map(|i| &e[i] + &bump[i]);
        let b_bumped = [0, 1, 2].map(|i| &b[i] + &random_polynomial(&mut rng, 4, 2));

        let gal = extract_equations(&e, &b, SpacetimeKind::Galilean).map_err(|x| x.to_string())?;
        ensure(!gal.tags().contains(&Tag::Gauss), || "Galilei has Gauss".to_string())?;
        let gal2 = extract_equations(&e_bumped, &b, SpacetimeKind::Galilean)
            .map_err(|x| x.to_string())?;
        ensure(gal.get(Tag::Ampere) == gal2.get(Tag::Ampere), || {
            "Galilei Ampere residual depends on dt E".to_string()
        })?;

        let car = extract_equations(&e, &b, SpacetimeKind::Carrollian).map_err(|x| x.to_string())?;
        ensure(!car.tags().contains(&Tag::Ampere), || "Carroll has Ampere".to_string())?;
        let car2 = extract_equations(&e, &b_bumped, SpacetimeKind::Carrollian)
            .map_err(|x| x.to_string())?;
        for tag in [Tag::Gauss, Tag::TimeConstancy] {
            ensure(car.get(tag) == car2.get(tag), || {
                format!("Carroll {tag} residual depends on B")
            })?;
        }
    }
    Ok("Galilei: no Gauss, no dt E; Carroll: no curl B".to_string())
}

fn solution_covariance() -> Outcome {
    let mut rng = rng_from_seed(4242);
    let mut cases = 0;
    for kind in KINDS {
        let maps: Vec<_> = (0..20).map(|_| random_matching_map(&mut rng, kind)).collect();
        for _ in 0..20 {
            let (e, b) = random_solution(&mut rng, kind);
            let solves = |e: &_, b: &_| -> Result<bool, String> {
                Ok(extract_equations(e, b, kind).map_err(|x| x.to_string())?.is_satisfied())
            };
            ensure(solves(&e, &b)?, || format!("{kind}: generator produced a non-solution"))?;
            for map in &maps {
                let (e2, b2) = transform_fields(&e, &b, map).map_err(|x| x.to_string())?;
                ensure(solves(&e2, &b2)?, || format!("{kind}: solution broken by {map:?}"))?;
                cases += 1;
            }
        }
    }
    Ok(format!("{cases} transformed solutions"))
}

fn group_properties(changes: &[(SpacetimeKind, FrameChange<R>)]) -> Outcome {
    for (kind, change) in changes {
        ensure(change.det() == R::from_integer(1.into()), || format!("det != 1: {change:?}"))?;
        let s = canonical(*kind, 4);
        let moved = pullback_structure(&s, change).map_err(|e| e.to_string())?;
        ensure(moved.h() == s.h(), || format!("{kind}: h moved by {change:?}"))?;
        ensure(moved.xi() == s.xi(), || format!("{kind}: xi moved by {change:?}"))?;
        ensure(moved == s, || format!("{kind}: structure moved by {change:?}"))?;
    }
    Ok(format!("{} frame changes", changes.len()))
}

fn main() -> ExitCode {
    let changes = adapted_changes();
    let criteria: Vec<Criterion> = vec![
        ("golden 1+3 star tables", Box::new(golden_tables)),
        ("closed forms equal contraction oracle, d = 2..6", Box::new(oracle_equivalence)),
        ("degenerate stars square to zero", Box::new(nilpotency)),
        ("exceptional-degree composites are stable signs", Box::new(exceptional_involution)),
        ("Galilean and Carrollian kernels", Box::new(kernels)),
        ("h/k star coincidences", Box::new(coincidences)),
        ("invariance under adapted groups, d = 4", Box::new(|| invariance(&changes))),
        ("naturality with transformed structures", Box::new(naturality)),
        ("field equations match vector calculus", Box::new(electrodynamics)),
        ("structural absences", Box::new(structural_absences)),
        ("solutions stay solutions under matching maps", Box::new(solution_covariance)),
        ("det = 1 and structure fixing", Box::new(|| group_properties(&changes))),
    ];
    let mut failures = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = run();
        let elapsed = start.elapsed();
        match result {
            Ok(detail) => println!("[PASS] {:>2} {name} ({detail}; {elapsed:.2?})", i + 1),
            Err(why) => {
                failures += 1;
                println!("[FAIL] {:>2} {name}: {why} ({elapsed:.2?})", i + 1);
            }
        }
    }
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
