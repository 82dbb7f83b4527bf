//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. Run with `cargo test --test acceptance`.

use std::process::ExitCode;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use localdual::decomp::{localized_excess, noetherian_certificate_with};
use localdual::io::parse_polynomial;
use localdual::localize::weyl_to_residue;
use localdual::oracle::{brute_dual, random_poly, BruteBasis, RandomIdealSpec};
use localdual::{
    annihilator_ideal, excess_dual, extend_scalars, membership, noetherian_certificate, ortiz_component,
    truncated_dual, DiffOperator, DualBasis, Field, Monomial, MonomialOrder, QIdeal, QPoly, QuotientDimension,
    RationalPoint, ResidueField, Splitting, Q,
};

/// All comparisons are exact; no disagreement is tolerated.
const ALLOWED_DISAGREEMENTS: usize = 0;
const ROUND_TRIP_IDEALS: usize = 50;
const MEMBERSHIP_SAMPLES: usize = 500;
const MEMBERSHIP_DEGREE: u32 = 6;
const LATTICE_PAIRS: usize = 20;
const RIGHT_ACTION_SAMPLES: usize = 200;
const PRIMARY_IDEALS: usize = 10;
const STABLE_ORDERS: u32 = 3;
const ORACLE_IDEALS: usize = 100;

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn vars(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("x{i}")).collect()
}

fn poly(s: &str) -> QPoly {
    parse_polynomial(s, &vars(2)).expect("valid polynomial")
}

fn ideal(gens: &[&str]) -> QIdeal {
    QIdeal::new(2, gens.iter().map(|g| poly(g)).collect())
}

fn maximal(n: usize) -> QIdeal {
    QIdeal::new(n, (0..n).map(|i| QPoly::var(n, i)).collect())
}

fn op(terms: &[(&[u32], i64)]) -> DiffOperator<Q> {
    DiffOperator::from_terms(
        2,
        terms
            .iter()
            .map(|(e, c)| (Monomial::new(e.to_vec()), Q::from_integer((*c).into()))),
    )
}

fn golden() -> QIdeal {
    QIdeal::intersect_all(&[
        ideal(&["x1 - x2^3"]),
        ideal(&["x2 - x1^3"]),
        ideal(&["x1^3", "x2^3", "x1^2*x2 - x1*x2^2"]),
    ])
    .unwrap()
}

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

/// Random ideal vanishing at the origin.
fn random_local_ideal(spec: &RandomIdealSpec, rng: &mut ChaCha8Rng) -> QIdeal {
    loop {
        let i = spec.generate_with(rng);
        let n = spec.nvars;
        let gens: Vec<QPoly> = i
            .gens()
            .iter()
            .map(|g| g - &QPoly::constant(n, g.constant_coeff()))
            .filter(|g| !g.is_zero())
            .collect();
        if !gens.is_empty() {
            return QIdeal::new(n, gens);
        }
    }
}

fn criterion_1() -> Check {
    let i = golden();
    let m = maximal(2);
    let origin = RationalPoint::<Q>::origin(2);

    // (a) the listed span, with the repeated ∂2^2 read as ∂2^3
    let dual = truncated_dual(&i, &origin, 3).map_err(|e| e.to_string())?;
    let listed = DualBasis::from_operators(
        2,
        3,
        &[
            op(&[(&[], 1)]),
            op(&[(&[1], 1)]),
            op(&[(&[0, 1], 1)]),
            op(&[(&[2], 1)]),
            op(&[(&[1, 1], 1)]),
            op(&[(&[0, 2], 1)]),
            op(&[(&[3], 1)]),
            op(&[(&[0, 3], 1)]),
            op(&[(&[2, 1], 1), (&[1, 2], 1)]),
        ],
    );
    ensure(dual.dim() == 9, format!("(a) dimension {} != 9", dual.dim()))?;
    ensure(dual.span_equals(&listed), "(a) span differs from the listed operators")?;

    // (b) excess representatives
    let sat = i.saturate(&m).map_err(|e| e.to_string())?;
    let ex = excess_dual(&i, &m, &sat, 1).map_err(|e| e.to_string())?;
    ensure(ex.dim() == 2, format!("(b) excess dimension {} != 2", ex.dim()))?;
    let as_q = |o: &DiffOperator<localdual::Residue<Q>>| o.map_coeffs(|k| k.as_base().expect("rational point"));
    let sat_ops: Vec<DiffOperator<Q>> = ex.sat_dual.operators().iter().map(as_q).collect();
    let mut combined = sat_ops.clone();
    combined.extend(ex.representatives.iter().map(as_q));
    let sat_span = DualBasis::from_operators(2, ex.order, &sat_ops);
    let combined = DualBasis::from_operators(2, ex.order, &combined);
    for target in [op(&[(&[1, 1], 1)]), op(&[(&[2, 1], 1), (&[1, 2], 1)])] {
        ensure(
            combined.contains(&target),
            format!("(b) {target} not in sat-dual + excess"),
        )?;
        ensure(
            !sat_span.contains(&target),
            format!("(b) {target} lies in the sat-dual"),
        )?;
    }

    // (c) Ortiz component
    let o = ortiz_component(&i, &m).map_err(|e| e.to_string())?;
    let q3 = ideal(&["x1^2*x2 - x1*x2^2"]).sum(&m.power(4)).unwrap();
    ensure(o.nil == 4, format!("(c) nil {} != 4", o.nil))?;
    let q = o.global.ok_or("(c) no global component")?;
    ensure(q.equals(&q3), "(c) component differs from <x1^2*x2 - x1*x2^2> + m^4")?;

    // (d) primary decomposition
    ensure(sat.intersect(&q).unwrap().equals(&i), "(d) I != (I : m^inf) ∩ Q3")?;
    Ok(format!("dim 9, excess 2 at d* = {}, nil 4, I = sat ∩ Q3", ex.order))
}

fn criterion_2() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut checks = 0;
    for k in 0..ROUND_TRIP_IDEALS {
        let n = 1 + k % 3;
        let spec = RandomIdealSpec {
            nvars: n,
            max_gens: 4,
            max_degree: 4,
            max_terms: 3,
            coeff_range: 4,
            seed: 0,
        };
        let i = random_local_ideal(&spec, &mut rng);
        let m = maximal(n);
        let origin = RationalPoint::<Q>::origin(n);
        for d in 1..=4 {
            let dual = truncated_dual(&i, &origin, d - 1).map_err(|e| e.to_string())?;
            let ann = annihilator_ideal(&dual, &origin).map_err(|e| e.to_string())?;
            let target = i.sum(&m.power(d)).unwrap();
            ensure(
                ann.equals(&target),
                format!("ideal {k} ({:?}), d = {d}: annihilator differs", i.gens()),
            )?;
            let (qd, _) = target.quotient_dimension();
            ensure(
                qd == QuotientDimension::Finite(dual.dim()),
                format!("ideal {k}, d = {d}: dim {} vs {qd:?}", dual.dim()),
            )?;
            checks += 1;
        }
    }
    Ok(format!(
        "{ROUND_TRIP_IDEALS} ideals x 4 orders = {checks} exact round trips"
    ))
}

#[allow(clippy::absurd_extreme_comparisons)]
fn membership_agreement(label: &str, i: &QIdeal, cert: &localdual::Certificate, extra: &[QPoly]) -> Check {
    let brute = BruteBasis::new(i, MonomialOrder::GrevLex);
    let brute_lex = BruteBasis::new(i, MonomialOrder::Lex);
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut samples: Vec<QPoly> = (0..MEMBERSHIP_SAMPLES)
        .map(|_| random_poly(&mut rng, 2, MEMBERSHIP_DEGREE, 6, 9))
        .collect();
    samples.extend(extra.iter().cloned());
    let mut disagreements = 0;
    let mut members = 0;
    for (k, f) in samples.iter().enumerate() {
        let ours = membership(f, cert).map_err(|e| e.to_string())?.is_member();
        let theirs = brute.contains(f);
        if k % 10 == 0 && brute_lex.contains(f) != theirs {
            return Err(format!("{label}: oracle depends on the monomial order for {f}"));
        }
        if ours != theirs {
            disagreements += 1;
        }
        members += theirs as usize;
    }
    ensure(
        disagreements <= ALLOWED_DISAGREEMENTS,
        format!("{label}: {disagreements} disagreements"),
    )?;
    ensure(members > 0, format!("{label}: no members among samples"))?;
    Ok(format!("{label}: {} polynomials ({members} members)", samples.len()))
}

fn criterion_3() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    // members, and near misses that pass every component but one
    let i = golden();
    let cert = noetherian_certificate(&i, &[ideal(&["x1 - x2^3"]), ideal(&["x2 - x1^3"]), maximal(2)])
        .map_err(|e| e.to_string())?;
    let g = poly("(x1 - x2^3)*(x2 - x1^3)");
    let mut extra = Vec::new();
    for _ in 0..50 {
        let h = random_poly(&mut rng, 2, 3, 4, 5);
        let gens = i.gens();
        extra.push(&gens[rng.gen_range(0..gens.len())] * &h);
        extra.push(&(&g * &poly("x1^2*x2 - x1*x2^2")) * &h);
        extra.push(&g * &h);
        extra.push(&(&g * &h) + &(&gens[0] * &random_poly(&mut rng, 2, 2, 3, 5)));
    }
    let n1 = membership_agreement("golden", &i, &cert, &extra)?;

    let p = ideal(&["x2 - x1^2"]);
    let j = ideal(&["(x2 - x1^2)^2"]);
    let cert = noetherian_certificate(&j, &[p]).map_err(|e| e.to_string())?;
    let mut extra = Vec::new();
    for _ in 0..100 {
        let h = random_poly(&mut rng, 2, 2, 3, 5);
        extra.push(&poly("(x2 - x1^2)^2") * &h);
        extra.push(&poly("x2 - x1^2") * &h);
    }
    let n2 = membership_agreement("(x2 - x1^2)^2", &j, &cert, &extra)?;
    Ok(format!("{n1}; {n2}; 0 disagreements"))
}

fn criterion_4() -> Check {
    let i = ideal(&["(x2 - x1^2)^2"]);
    let p = ideal(&["x2 - x1^2"]);
    let s = Splitting::with_free(&p, &[0]).map_err(|e| e.to_string())?;
    let cert = noetherian_certificate_with(&i, &[(p.clone(), Some(s.clone()))]).map_err(|e| e.to_string())?;
    let c = &cert.components[0];
    ensure(c.operators.len() == 2, format!("{} operators", c.operators.len()))?;

    let lp = extend_scalars(&p, &s);
    let kappa = ResidueField::new(&lp.ideal).map_err(|e| e.to_string())?;
    let ops: Vec<_> = c.operators.iter().map(|w| weyl_to_residue(w, &s, &kappa)).collect();
    let ours = DualBasis::from_operators(1, 1, &ops);
    let one = localdual::Residue::constant(<localdual::Qt as Field>::from_int(1));
    let expected = DualBasis::from_operators(
        1,
        1,
        &[
            DiffOperator::monomial(1, Monomial::one(), one.clone()),
            DiffOperator::monomial(1, Monomial::var(0), one),
        ],
    );
    ensure(ours.span_equals(&expected), "operators do not span {1, d_x2}")?;

    let li = extend_scalars(&i, &s);
    let brute = brute_dual(&li.ideal, &kappa, 1).map_err(|e| e.to_string())?;
    ensure(brute.span_equals(&ours), "brute-force localized dual differs")?;
    let (ex, _) = localized_excess(&i, &p, &s, 1).map_err(|e| e.to_string())?;
    let brute = brute_dual(&li.ideal, &kappa, ex.order + 1).map_err(|e| e.to_string())?;
    ensure(brute.span_equals(&ours), "dual grows beyond the stopping order")?;

    let default = noetherian_certificate(&i, &[p]).map_err(|e| e.to_string())?;
    let shown: Vec<String> = c.operators.iter().map(|o| o.format_with(&vars(2))).collect();
    Ok(format!(
        "t = {{x1}}: [{}]; default splitting also yields {} operators",
        shown.join(", "),
        default.components[0].operators.len()
    ))
}

fn criterion_5() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let origin = RationalPoint::<Q>::origin(2);
    let spec = RandomIdealSpec {
        nvars: 2,
        max_gens: 3,
        max_degree: 3,
        max_terms: 3,
        coeff_range: 4,
        seed: 0,
    };
    let dual = |i: &QIdeal, d: u32| truncated_dual(i, &origin, d).unwrap();
    let check_pair =
        |i: &QIdeal, j: &QIdeal, orders: std::ops::RangeInclusive<u32>, both: bool| -> Result<(), String> {
            for d in orders {
                let (di, dj) = (dual(i, d), dual(j, d));
                ensure(
                    dual(&i.sum(j).unwrap(), d).span_equals(&di.intersection(&dj)),
                    format!("D[I+J] != D[I] ∩ D[J] at order {d} for {:?}, {:?}", i.gens(), j.gens()),
                )?;
                if both {
                    ensure(
                        dual(&i.intersect(j).unwrap(), d).span_equals(&di.sum(&dj)),
                        format!("D[I∩J] != D[I] + D[J] at order {d} for {:?}, {:?}", i.gens(), j.gens()),
                    )?;
                }
            }
            Ok(())
        };

    check_pair(&ideal(&["x1^2"]), &ideal(&["x2^2"]), 0..=3, true)?;
    let m4 = maximal(2).power(4);
    for _ in 0..LATTICE_PAIRS {
        // general pairs: the sum identity at every order
        let i = random_local_ideal(&spec, &mut rng);
        let j = random_local_ideal(&spec, &mut rng);
        check_pair(&i, &j, 0..=3, false)?;
        // pairs containing m^4: order 3 is the whole dual
        let (pi, pj) = (i.sum(&m4).unwrap(), j.sum(&m4).unwrap());
        check_pair(&pi, &pj, 3..=3, true)?;
        // monomial pairs: both identities at every order
        let mono = |rng: &mut ChaCha8Rng| {
            let k = rng.gen_range(1..=3);
            QIdeal::new(
                2,
                (0..k)
                    .map(|_| {
                        QPoly::term(
                            2,
                            Monomial::new(vec![rng.gen_range(0..4), rng.gen_range(0..4)]),
                            Q::from_integer(1.into()),
                        )
                    })
                    .collect(),
            )
        };
        let (mi, mj) = (mono(&mut rng), mono(&mut rng));
        check_pair(&mi, &mj, 0..=3, true)?;
    }
    Ok(format!(
        "<x1^2>/<x2^2> and {LATTICE_PAIRS} x 3 random pairs (general: sum identity; m^4-primary and monomial: both)"
    ))
}

fn criterion_6() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let points = [
        vec![Q::from_integer(0.into()), Q::from_integer(0.into())],
        vec![Q::from_integer(1.into()), Q::from_integer((-2).into())],
        vec![Q::new(1.into(), 2.into()), Q::new(3.into(), 5.into())],
    ];
    let columns = localdual::monomial::monomials_up_to(2, 4);
    for k in 0..RIGHT_ACTION_SAMPLES {
        let p = &points[k % points.len()];
        let point = RationalPoint::new(p.clone());
        let d = DiffOperator::from_terms(
            2,
            (0..rng.gen_range(1..=4)).map(|_| {
                (
                    columns[rng.gen_range(0..columns.len())].clone(),
                    Q::new(rng.gen_range(-9..=9).into(), rng.gen_range(1..=4).into()),
                )
            }),
        );
        let f = random_poly(&mut rng, 2, 5, 5, 9);
        let i = rng.gen_range(0..2);
        let shift = &QPoly::var(2, i) - &QPoly::constant(2, p[i].clone());
        let lhs = d.apply(&(&shift * &f), &point);
        let rhs = d.antidifferentiate(i).apply(&f, &point);
        ensure(
            lhs == rhs,
            format!("sample {k}: {lhs} != {rhs} for D = {d}, f = {f}, i = {i}"),
        )?;
    }
    Ok(format!("{RIGHT_ACTION_SAMPLES} samples at 3 points"))
}

fn criterion_7() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let origin = RationalPoint::<Q>::origin(2);
    let spec = RandomIdealSpec {
        nvars: 2,
        max_gens: 3,
        max_degree: 3,
        max_terms: 3,
        coeff_range: 4,
        seed: 0,
    };
    let mut reached = Vec::new();
    for k in 0..PRIMARY_IDEALS {
        let power = rng.gen_range(2..=4);
        let i = random_local_ideal(&spec, &mut rng)
            .sum(&maximal(2).power(power))
            .unwrap();
        let dims: Vec<usize> = (0..=power + STABLE_ORDERS)
            .map(|d| truncated_dual(&i, &origin, d).unwrap().dim())
            .collect();
        let first = (0..dims.len() - 1)
            .find(|&d| dims[d] == dims[d + 1])
            .ok_or(format!("ideal {k}: no stabilization"))?;
        ensure(
            first + (STABLE_ORDERS as usize) < dims.len(),
            format!("ideal {k}: stabilized too late to confirm ({dims:?})"),
        )?;
        ensure(
            dims[first..=first + STABLE_ORDERS as usize]
                .iter()
                .all(|&x| x == dims[first]),
            format!("ideal {k}: dimensions {dims:?} change after stabilizing"),
        )?;
        let (qd, _) = i.quotient_dimension();
        ensure(
            qd == QuotientDimension::Finite(dims[first]),
            format!("ideal {k}: {qd:?} vs {}", dims[first]),
        )?;
        reached.push(first);
    }
    let g = golden();
    let (d3, d4) = (
        truncated_dual(&g, &origin, 3).unwrap().dim(),
        truncated_dual(&g, &origin, 4).unwrap().dim(),
    );
    ensure(d4 > d3, format!("golden ideal: dim {d3} at order 3, {d4} at order 4"))?;
    Ok(format!("stabilization orders {reached:?}; golden ideal {d3} -> {d4}"))
}

fn criterion_8() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let points = [vec![0, 0, 0], vec![1, -1, 2], vec![2, 3, -1]];
    for k in 0..ORACLE_IDEALS {
        let n = 1 + k % 3;
        let spec = RandomIdealSpec {
            nvars: n,
            max_gens: 4,
            max_degree: 4,
            max_terms: 3,
            coeff_range: 4,
            seed: k as u64,
        };
        let i = spec.generate();
        let p: Vec<Q> = points[k % 3]
            .iter()
            .take(n)
            .map(|&c| Q::from_integer(c.into()))
            .collect();
        let point = RationalPoint::new(p);
        let d = rng.gen_range(0..=3);
        let fast = truncated_dual(&i, &point, d).map_err(|e| e.to_string())?;
        let slow = brute_dual(&i, &point, d).map_err(|e| e.to_string())?;
        ensure(fast.span_equals(&slow), format!("ideal {k} at order {d}: spans differ"))?;
    }
    Ok(format!("{ORACLE_IDEALS} seeded ideals at 3 points"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("golden example", criterion_1),
        ("truncation round trip", criterion_2),
        ("membership equivalence", criterion_3),
        ("non-rational prime", criterion_4),
        ("lattice properties", criterion_5),
        ("right-action identity", criterion_6),
        ("stabilization", criterion_7),
        ("oracle equivalence", criterion_8),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = run();
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("PASS criterion {} ({name}): {detail} [{secs:.2}s]", k + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {} ({name}): {why} [{secs:.2}s]", k + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
