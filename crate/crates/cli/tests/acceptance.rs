//! Acceptance suite: one test per criterion, each printing a PASS/FAIL line.
//! All comparisons are exact; run with `cargo test --test acceptance`
//! (`-- --nocapture` shows the per-criterion lines).

use std::collections::BTreeMap;

use motivic_cli::corpus;
use motivic_core::counting::{
    assemble_series, count_congruence, count_contact, count_jet_points, fit_rational,
    verify_rational, CountMode, CountOptions, CountSeries, DenominatorShape,
};
use motivic_core::exactalg::{parse_poly, MPoly, RatFunc, Rational, Var};
use motivic_core::invariants::{
    birational_identity, candidate_poles, extract_poles, j_from_z, limit_s1, monodromy_check,
    motivic_volume, motivic_zeta, poles_contained, seifert_e_st, stringy_invariants, stringy_zeta,
    z_top, EigenvalueSet, SeifertData,
};
use motivic_core::jets::{jet_equations, AffineSystem};
use motivic_core::strata::{classify, load_resolution, SingularityClass};
use num_bigint::BigInt;
use num_traits::ToPrimitive;

/// Prints the per-criterion verdict even when the test panics mid-way.
struct Criterion {
    number: u32,
    label: &'static str,
    passed: bool,
}

impl Criterion {
    fn new(number: u32, label: &'static str) -> Self {
        Criterion { number, label, passed: false }
    }

    fn pass(mut self) {
        self.passed = true;
        println!("ACCEPTANCE {:2} ({}): PASS", self.number, self.label);
    }
}

impl Drop for Criterion {
    fn drop(&mut self) {
        if !self.passed {
            println!("ACCEPTANCE {:2} ({}): FAIL", self.number, self.label);
        }
    }
}

fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

fn qq(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

fn rf(n: &str, d: &str) -> RatFunc {
    RatFunc::new(parse_poly(n).unwrap(), parse_poly(d).unwrap()).unwrap()
}

fn opts() -> CountOptions {
    CountOptions::default()
}

#[test]
fn acceptance_01_congruence_counts() {
    let c = Criterion::new(1, "congruence counts match closed forms");
    let parabola = AffineSystem::parse(corpus::PARABOLA_POLY).unwrap();
    let node = AffineSystem::parse(corpus::NODE_POLY).unwrap();
    let cusp = AffineSystem::parse(corpus::CUSP_POLY).unwrap();
    for p in [2u64, 3] {
        for n in 0..=4u32 {
            assert_eq!(
                count_congruence(&parabola, p, n, &opts()).unwrap(),
                p.pow(n + 1),
                "f1 p={p} n={n}"
            );
            assert_eq!(
                count_congruence(&node, p, n, &opts()).unwrap(),
                (n as u64 + 2) * p.pow(n + 1) - (n as u64 + 1) * p.pow(n),
                "f2 p={p} n={n}"
            );
            let expect = if n == 0 { p } else { p.pow(n) * (2 * p - 1) };
            assert_eq!(count_congruence(&cusp, p, n, &opts()).unwrap(), expect, "f3 p={p} n={n}");
        }
    }
    // F_5 = p^5 (p^2 + p - 1) at p = 2
    assert_eq!(count_congruence(&cusp, 2, 5, &opts()).unwrap(), 2u64.pow(5) * 5);
    c.pass();
}

#[test]
fn acceptance_02_igusa_series() {
    let c = Criterion::new(2, "Igusa series verified and fitted");
    let parabola = AffineSystem::parse(corpus::PARABOLA_POLY).unwrap();
    let node = AffineSystem::parse(corpus::NODE_POLY).unwrap();
    for p in [2u64, 3] {
        let series_of = |sys: &AffineSystem| {
            let counts = (0..=6)
                .map(|n| BigInt::from(count_congruence(sys, p, n, &opts()).unwrap()))
                .collect();
            assemble_series(&CountSeries::new(p, CountMode::Congruence, counts)).unwrap()
        };
        let jp1 = rf(&format!("{p}"), &format!("1 - {p}*T"));
        let parabola_series = series_of(&parabola);
        assert!(verify_rational(&parabola_series, &jp1).unwrap(), "f1 p={p}");
        let geometric = DenominatorShape::new(vec![(1, 1)]);
        assert!(fit_rational(&parabola_series, &geometric, p, None).unwrap().equal(&jp1));

        let node_series = series_of(&node);
        let jp2 = rf(&format!("{} - {}*T", 2 * p - 1, p * p), &format!("(1 - {p}*T)^2"));
        assert!(verify_rational(&node_series, &jp2).unwrap(), "f2 p={p}");

        let shape = DenominatorShape::new(vec![(1, 1), (1, 1)]);
        let fitted = fit_rational(&node_series, &shape, p, None).unwrap();
        assert!(fitted.equal(&jp2), "fit p={p}");
    }
    c.pass();
}

#[test]
fn acceptance_03_jet_equations() {
    let c = Criterion::new(3, "cusp jet equations reproduce the displayed systems");
    let cusp = AffineSystem::parse(corpus::CUSP_POLY).unwrap();
    let js1 = jet_equations(&cusp, 1).unwrap();
    assert_eq!(js1.groups()[0][0], parse_poly("x2_0^2 - x1_0^3").unwrap());
    assert_eq!(js1.groups()[0][1], parse_poly("2*x2_0*x2_1 - 3*x1_0^2*x1_1").unwrap());
    let js2 = jet_equations(&cusp, 2).unwrap();
    assert_eq!(js2.groups()[0][0], js1.groups()[0][0]);
    assert_eq!(js2.groups()[0][1], js1.groups()[0][1]);
    assert_eq!(
        js2.groups()[0][2],
        parse_poly("x2_1^2 + 2*x2_0*x2_2 - 3*x1_0*x1_1^2 - 3*x1_0^2*x1_2").unwrap()
    );
    c.pass();
}

#[test]
fn acceptance_04_jet_classes() {
    let c = Criterion::new(4, "jet-point counts equal class polynomials at primes");
    let cusp = AffineSystem::parse(corpus::CUSP_POLY).unwrap();
    let node = AffineSystem::parse(corpus::NODE_POLY).unwrap();
    let cusp_classes = ["L", "2*L^2 - L", "2*L^3 - L^2"];
    for p in [2u64, 3, 5] {
        for (n, cls) in cusp_classes.iter().enumerate() {
            let expect = parse_poly(cls).unwrap().eval_at_prime(p).unwrap();
            let count = count_jet_points(&jet_equations(&cusp, n).unwrap(), p, &opts()).unwrap();
            assert_eq!(expect, BigInt::from(count), "cusp p={p} n={n}");
        }
        for n in 0..=3usize {
            let cls = format!("{}*L^{} - {}*L^{}", n + 2, n + 1, n + 1, n);
            let expect = parse_poly(&cls).unwrap().eval_at_prime(p).unwrap();
            let count = count_jet_points(&jet_equations(&node, n).unwrap(), p, &opts()).unwrap();
            assert_eq!(expect, BigInt::from(count), "node p={p} n={n}");
        }
    }
    c.pass();
}

#[test]
fn acceptance_05_motivic_volumes() {
    let c = Criterion::new(5, "motivic volumes and arc-Euler characteristics");
    let cusp = motivic_volume(&load_resolution(corpus::CUSP_VOLUME).unwrap()).unwrap();
    assert!(cusp.to_ratfunc().unwrap().equal(&rf("L^2", "L + 1")));
    assert_eq!(cusp.specialize_chi().unwrap(), qq(1, 2));

    let quadric = motivic_volume(&load_resolution(corpus::Z2XY_VOLUME).unwrap()).unwrap();
    assert!(quadric.to_ratfunc().unwrap().equal(&rf("L^2", "1")));

    let node = motivic_volume(&load_resolution(corpus::XY_VOLUME).unwrap()).unwrap();
    assert!(node.to_ratfunc().unwrap().equal(&rf("2*L", "1")));
    assert_eq!(node.specialize_chi().unwrap(), q(2));
    c.pass();
}

#[test]
fn acceptance_06_motivic_zeta() {
    let c = Criterion::new(6, "cusp motivic zeta, J(T), and contact-count cross-check");
    let data = load_resolution(corpus::CUSP_ZETA).unwrap();
    let zeta = motivic_zeta(&data).unwrap();
    let golden = rf(
        "L^2*(L - 1)*(L^5 - L^3*T + L^3*T^2 - T^5)",
        "(L^5 - T^6)*(L - T)",
    );
    assert!(zeta.to_ratfunc().unwrap().equal(&golden), "Z(T) closed form");

    let j = j_from_z(&zeta, 2).unwrap();
    let j_golden = rf(
        "L*(1 + (L - 1)*T + (L^6 - L^5)*T^5 - L^7*T^6)",
        "(1 - L^7*T^6)*(1 - L*T)",
    );
    assert!(j.equal(&j_golden), "J(T) closed form");

    let series = zeta.series_expand(4).unwrap();
    let cusp = AffineSystem::parse(corpus::CUSP_POLY).unwrap();
    for p in [2u64, 3] {
        for n in 0..=4u32 {
            let point = BTreeMap::from([(Var::new("L"), q(p as i64))]);
            let value = series.coeff(n as usize).eval(&point).unwrap()
                * Rational::from_integer(BigInt::from(p).pow(2 * n));
            let brute = count_contact(&cusp, p, n, &opts()).unwrap();
            assert!(value.is_integer());
            assert_eq!(value.to_integer().to_u64().unwrap(), brute, "p={p} n={n}");
        }
    }
    c.pass();
}

#[test]
fn acceptance_07_topological_zeta_and_monodromy() {
    let c = Criterion::new(7, "topological zeta, poles and monodromy check");
    let data = load_resolution(corpus::CUSP_ZETA).unwrap();
    let f = z_top(&data).unwrap();
    assert!(f.equal(&rf("5 + 4*s", "(5 + 6*s)*(1 + s)")));
    let poles = extract_poles(&f, &candidate_poles(&data)).unwrap();
    assert_eq!(poles.poles, vec![(q(-1), 1), (qq(-5, 6), 1)]);
    let eigen = EigenvalueSet::new([q(0), qq(1, 6), qq(5, 6)]);
    let verdicts = monodromy_check(&poles, &eigen);
    assert_eq!(verdicts.len(), 2);
    assert!(verdicts.iter().all(|v| v.satisfied));
    c.pass();
}

#[test]
fn acceptance_08_birational_identity() {
    let c = Criterion::new(8, "blow-up class and Euler identities");
    let data = load_resolution(corpus::BLOWUP_IDENTITY).unwrap();
    assert!(birational_identity(&data, &parse_poly("L^2").unwrap()).unwrap());
    c.pass();
}

#[test]
fn acceptance_09_stringy_invariants() {
    let c = Criterion::new(9, "stringy invariants and classification trichotomy");
    // z^2 = xy
    let inv = stringy_invariants(&load_resolution(corpus::Z2XY_STRINGY).unwrap()).unwrap();
    assert!(inv.class_l.as_ref().unwrap().to_ratfunc().unwrap().equal(&rf("L^2 + L", "1")));
    assert_eq!(inv.euler, q(2));

    // Fermat family with symbolic [E], d = 3, k = 2:
    // (i) cal E_st = (L-1)[E] + [E](L-1)/(L^{d+1-k}-1) termwise
    let fermat = stringy_invariants(&load_resolution(corpus::FERMAT_STRINGY).unwrap()).unwrap();
    let cal = fermat.class_l.as_ref().unwrap();
    assert_eq!(cal.terms().len(), 2);
    assert_eq!(cal.terms()[0].coeff, parse_poly("(L - 1)*E").unwrap());
    assert!(cal.terms()[0].factors.is_empty());
    assert_eq!(cal.terms()[1].coeff, parse_poly("E").unwrap());
    assert_eq!(cal.terms()[1].factors.len(), 1);
    assert_eq!(*cal.terms()[1].factors[0].nu(), q(2));
    assert_eq!(*cal.terms()[1].factors[0].n(), q(0));

    // (ii) the volume is (L-1)[E] + [E](L-1)/(L^d - 1) termwise, rho = d = 3
    let volume_doc = load_resolution(corpus::FERMAT_VOLUME).unwrap();
    let vol = motivic_volume(&volume_doc).unwrap();
    assert_eq!(vol.terms().len(), 2);
    assert_eq!(vol.terms()[0].coeff, parse_poly("(L - 1)*E").unwrap());
    assert!(vol.terms()[0].factors.is_empty());
    assert_eq!(vol.terms()[1].coeff, parse_poly("E").unwrap());
    assert_eq!(vol.terms()[1].factors.len(), 1);
    assert_eq!(*vol.terms()[1].factors[0].nu(), q(3));
    assert_eq!(*vol.terms()[1].factors[0].n(), q(0));

    // (iii) [X] = (L-1)[E] + 1
    let e = volume_doc.strata[1].class_l.clone().unwrap();
    let complement = volume_doc.strata[0].class_l.clone().unwrap();
    let lhs = &complement + &MPoly::one();
    let rhs = &(&(&MPoly::var("L") - &MPoly::one()) * &e) + &MPoly::one();
    assert_eq!(lhs, rhs);

    // classification trichotomy for k vs d + 1
    let d = 3i64;
    for k in 1..=7i64 {
        let class = classify(&[q(d + 1 - k)]);
        match k.cmp(&(d + 1)) {
            std::cmp::Ordering::Less => assert!(class.is_log_terminal(), "k={k}"),
            std::cmp::Ordering::Equal => assert_eq!(class, SingularityClass::StrictlyLogCanonical),
            std::cmp::Ordering::Greater => assert_eq!(class, SingularityClass::NotLogCanonical),
        }
    }
    c.pass();
}

#[test]
fn acceptance_10_stringy_zeta() {
    let c = Criterion::new(10, "stringy zeta of the threefold and the log terminal constant");
    let threefold = load_resolution(corpus::THREEFOLD_STRINGY_ZETA).unwrap();
    let z = stringy_zeta(&threefold).unwrap();
    // the document omits the empty stratum, so the symbolic chi(X \ {P})
    // summand is exactly what a chi value on that stratum would add
    assert!(z.equal(&rf("13", "s")));
    assert_eq!(limit_s1(&z).unwrap(), q(13));
    for chi in [q(5), q(-2)] {
        let mut with_complement = threefold.clone();
        with_complement.strata.push(motivic_core::StratumRecord {
            subset: Default::default(),
            chi: chi.clone(),
            hodge: None,
            class_l: None,
        });
        let shifted = stringy_zeta(&with_complement).unwrap();
        let expect = &rf("13", "s") + &RatFunc::from_rational(chi.clone());
        assert!(shifted.equal(&expect));
        assert_eq!(limit_s1(&shifted).unwrap(), q(13) + chi);
    }

    // log terminal input: constant equal to its e_st
    let lt = stringy_zeta(&load_resolution(corpus::Z2XY_STRINGY_ZETA).unwrap()).unwrap();
    let e_st = stringy_invariants(&load_resolution(corpus::Z2XY_STRINGY).unwrap()).unwrap().euler;
    assert_eq!(lt.as_constant().unwrap(), e_st);
    c.pass();
}

/// Independent oracle for criterion 11: |det| of the star-shaped intersection
/// matrix, by integer Laplace expansion.
fn det_i128(m: &[Vec<i128>]) -> i128 {
    let n = m.len();
    if n == 1 {
        return m[0][0];
    }
    let mut acc = 0i128;
    for (j, &entry) in m[0].iter().enumerate() {
        if entry == 0 {
            continue;
        }
        let minor: Vec<Vec<i128>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(k, _)| *k != j)
                    .map(|(_, v)| *v)
                    .collect()
            })
            .collect();
        let sign = if j % 2 == 0 { 1 } else { -1 };
        acc += sign * entry * det_i128(&minor);
    }
    acc
}

#[test]
fn acceptance_11_seifert_formula() {
    let c = Criterion::new(11, "Seifert closed form and determinant consistency");
    for ns in [[2u64, 3, 7], [2, 3, 11], [3, 4, 5]] {
        let data = SeifertData {
            g: 0,
            kappa: 1,
            chains: ns.iter().map(|n| (*n, 1)).collect(),
            chi_complement: None,
            d: None,
        };
        let result = seifert_e_st(&data).unwrap();
        assert_eq!(result.a, q(-1), "{ns:?}");
        let total: i64 = ns.iter().map(|n| *n as i64).sum();
        assert_eq!(result.e_st.base, q(1 - total), "{ns:?}");
    }

    // (2,3,7): dDerived matches the |det| of the 4x4 intersection matrix
    // [central -1; chains -2, -3, -7 each meeting the centre once]
    let matrix = vec![
        vec![-1i128, 1, 1, 1],
        vec![1, -2, 0, 0],
        vec![1, 0, -3, 0],
        vec![1, 0, 0, -7],
    ];
    let oracle = det_i128(&matrix).abs();
    let data = SeifertData::parse(corpus::TRIANGLE_SEIFERT).unwrap();
    let result = seifert_e_st(&data).unwrap();
    assert_eq!(result.d_derived, BigInt::from(oracle));
    assert_eq!(oracle, 1);
    c.pass();
}

#[test]
fn acceptance_12_property_suites() {
    let c = Criterion::new(12, "specialization chains, pole containment, coherence, parallelism");
    // specialization-chain commutativity on the stringy documents (the
    // symbolic-E document is checked termwise: hodge = class with L -> uv)
    for (name, doc) in corpus::stringy_documents() {
        let inv = stringy_invariants(&load_resolution(doc).unwrap()).unwrap();
        let cal = inv.class_l.as_ref().unwrap();
        let hodge = inv.hodge.as_ref().unwrap();
        assert_eq!(&cal.specialize_hodge().unwrap(), hodge, "{name}: class -> hodge");
        match hodge.specialize_chi() {
            Ok(via_hodge) => assert_eq!(via_hodge, inv.euler, "{name}: hodge -> euler"),
            Err(_) => assert_eq!(name, "fermat-stringy", "only the symbolic document may skip chi"),
        }
    }

    // pole containment on all zeta documents
    for (name, doc) in corpus::zeta_documents() {
        let data = load_resolution(doc).unwrap();
        assert!(
            poles_contained(&z_top(&data).unwrap(), &candidate_poles(&data)).unwrap(),
            "{name}"
        );
    }

    // truncation coherence of jet systems for n <= 4 on three input systems
    for poly in [corpus::CUSP_POLY, corpus::NODE_POLY, corpus::PARABOLA_POLY] {
        let sys = AffineSystem::parse(poly).unwrap();
        for n in 1..=4usize {
            let full = jet_equations(&sys, n).unwrap();
            let lower = jet_equations(&sys, n - 1).unwrap();
            assert_eq!(full.truncated().unwrap(), lower);
        }
    }

    // parallel vs sequential on a budget-scale instance (5^10 ambient points)
    let cusp = AffineSystem::parse(corpus::CUSP_POLY).unwrap();
    let seq = count_congruence(&cusp, 5, 4, &CountOptions { threads: 1, ..opts() }).unwrap();
    let par = count_congruence(&cusp, 5, 4, &CountOptions { threads: 4, ..opts() }).unwrap();
    assert_eq!(seq, par);
    assert_eq!(seq, 5u64.pow(4) * 9, "F_4 = p^4 (2p - 1) at p = 5");
    c.pass();
}
