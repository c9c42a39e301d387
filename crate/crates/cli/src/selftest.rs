//! The built-in golden-example suite: every bundled document is run through
//! the invariants it feeds and compared against its known closed form.

use motivic_core::counting::{
    assemble_series, count_congruence, count_contact, count_jet_points, fit_rational,
    verify_rational, CountMode, CountOptions, CountSeries, DenominatorShape,
};
use motivic_core::exactalg::{parse_poly, RatFunc, Rational, Var};
use motivic_core::invariants::{
    birational_identity, candidate_poles, extract_poles, j_from_z, limit_s1, monodromy_check,
    motivic_volume, motivic_zeta, nc_integral, poles_contained, seifert_e_st, stringy_invariants,
    stringy_zeta, z_top, EigenvalueSet, SeifertData,
};
use motivic_core::jets::{jet_equations, AffineSystem};
use motivic_core::strata::{check_additivity, classify, load_resolution};
use num_bigint::BigInt;

use crate::corpus;
use crate::report::Check;

fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

fn qq(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

fn rf(n: &str, d: &str) -> RatFunc {
    RatFunc::new(parse_poly(n).unwrap(), parse_poly(d).unwrap()).unwrap()
}

/// Run the whole suite; a failed closed form shows up as a failed check, an
/// unexpected error as a check whose actual value is the error text.
pub fn run(opts: &CountOptions) -> Vec<Check> {
    let mut checks = Vec::new();
    match run_inner(opts, &mut checks) {
        Ok(()) => checks,
        Err(e) => {
            checks.push(Check::assert("selftest-completed", false, format!("error: {e}")));
            checks
        }
    }
}

fn run_inner(opts: &CountOptions, checks: &mut Vec<Check>) -> anyhow::Result<()> {
    let cusp = AffineSystem::parse(corpus::CUSP_POLY)?;
    let node = AffineSystem::parse(corpus::NODE_POLY)?;
    let parabola = AffineSystem::parse(corpus::PARABOLA_POLY)?;

    // congruence counts against the closed forms
    for p in [2u64, 3] {
        let top = if p == 2 { 5 } else { 4 };
        for n in 0..=top {
            let f = count_congruence(&cusp, p, n, opts)?;
            let expect = match n {
                0 => p,
                1..=4 => p.pow(n) * (2 * p - 1),
                _ => p.pow(5) * (p * p + p - 1),
            };
            checks.push(Check::compare(format!("congruence-cusp-p{p}-n{n}"), expect, f));
        }
        for n in 0..=4 {
            let f = count_congruence(&parabola, p, n, opts)?;
            checks.push(Check::compare(format!("congruence-parabola-p{p}-n{n}"), p.pow(n + 1), f));
            let f = count_congruence(&node, p, n, opts)?;
            let expect = (n as u64 + 2) * p.pow(n + 1) - (n as u64 + 1) * p.pow(n);
            checks.push(Check::compare(format!("congruence-node-p{p}-n{n}"), expect, f));
        }
    }

    // generating series: verification and fitting
    for p in [2u64, 3] {
        let count_series = |sys: &AffineSystem| -> anyhow::Result<_> {
            let counts = (0..=6)
                .map(|n| Ok(BigInt::from(count_congruence(sys, p, n, opts)?)))
                .collect::<anyhow::Result<Vec<_>>>()?;
            Ok(assemble_series(&CountSeries::new(p, CountMode::Congruence, counts)).unwrap())
        };
        let jp1 = rf(&format!("{p}"), &format!("1 - {p}*T"));
        checks.push(Check::assert(
            format!("igusa-verify-parabola-p{p}"),
            verify_rational(&count_series(&parabola)?, &jp1)?,
            "series matches p/(1 - pT)",
        ));
        let jp2 = rf(&format!("{} - {}*T", 2 * p - 1, p * p), &format!("(1 - {p}*T)^2"));
        let node_series = count_series(&node)?;
        checks.push(Check::assert(
            format!("igusa-verify-node-p{p}"),
            verify_rational(&node_series, &jp2)?,
            "series matches (2p - 1 - p^2 T)/(1 - pT)^2",
        ));
        let fitted = fit_rational(&node_series, &DenominatorShape::new(vec![(1, 1), (1, 1)]), p, None)?;
        checks.push(Check::assert(
            format!("igusa-fit-node-p{p}"),
            fitted.equal(&jp2),
            format!("fit = {fitted}"),
        ));
    }

    // jet equations of the cusp
    let js = jet_equations(&cusp, 2)?;
    checks.push(Check::compare(
        "jets-cusp-t0",
        "-x1_0^3 + x2_0^2",
        js.groups()[0][0].to_string(),
    ));
    checks.push(Check::compare(
        "jets-cusp-t1",
        "-3*x1_0^2*x1_1 + 2*x2_0*x2_1",
        js.groups()[0][1].to_string(),
    ));
    checks.push(Check::compare(
        "jets-cusp-t2",
        "-3*x1_0^2*x1_2 - 3*x1_0*x1_1^2 + 2*x2_0*x2_2 + x2_1^2",
        js.groups()[0][2].to_string(),
    ));

    // jet-point counts against the class polynomials
    let cusp_classes = ["L", "2*L^2 - L", "2*L^3 - L^2"];
    for p in [2u64, 3, 5] {
        for (n, cls) in cusp_classes.iter().enumerate() {
            let expect = parse_poly(cls)?.eval_at_prime(p)?;
            let count = count_jet_points(&jet_equations(&cusp, n)?, p, opts)?;
            checks.push(Check::compare(format!("jet-class-cusp-p{p}-n{n}"), expect, count));
        }
        for n in 0..=3usize {
            let cls = format!("{}*L^{} - {}*L^{}", n + 2, n + 1, n + 1, n);
            let expect = parse_poly(&cls)?.eval_at_prime(p)?;
            let count = count_jet_points(&jet_equations(&node, n)?, p, opts)?;
            checks.push(Check::compare(format!("jet-class-node-p{p}-n{n}"), expect, count));
        }
    }

    // motivic volumes and arc-Euler characteristics
    let vol = motivic_volume(&load_resolution(corpus::CUSP_VOLUME)?)?;
    checks.push(Check::assert(
        "volume-cusp",
        vol.to_ratfunc()?.equal(&rf("L^2", "L + 1")),
        format!("{}", vol.to_ratfunc()?),
    ));
    checks.push(Check::compare("arc-euler-cusp", "1/2", format!("{}", vol.specialize_chi()?)));
    let vol = motivic_volume(&load_resolution(corpus::Z2XY_VOLUME)?)?;
    checks.push(Check::assert("volume-z2xy", vol.to_ratfunc()?.equal(&rf("L^2", "1")), "L^2"));
    let vol = motivic_volume(&load_resolution(corpus::XY_VOLUME)?)?;
    checks.push(Check::assert("volume-xy", vol.to_ratfunc()?.equal(&rf("2*L", "1")), "2L"));
    checks.push(Check::compare("arc-euler-xy", "2", format!("{}", vol.specialize_chi()?)));

    // normal-crossings integral over A^1 with a fat point
    let nc = nc_integral(&load_resolution(corpus::NC_A1)?)?;
    let expect = &rf("L - 1", "1") + &rf("L - 1", "L^4 - 1");
    checks.push(Check::assert("nc-integral-a1", nc.to_ratfunc()?.equal(&expect), "matches"));

    // the cusp zeta function and its relatives
    let cusp_doc = load_resolution(corpus::CUSP_ZETA)?;
    checks.push(Check::assert(
        "cusp-chi-additivity",
        check_additivity(&cusp_doc, &q(4))?,
        "strata chi values sum to chi of the blown-up plane",
    ));
    let zeta = motivic_zeta(&cusp_doc)?;
    let golden = rf("L^2*(L - 1)*(L^5 - L^3*T + L^3*T^2 - T^5)", "(L^5 - T^6)*(L - T)");
    checks.push(Check::assert("zeta-cusp", zeta.to_ratfunc()?.equal(&golden), "matches closed form"));
    let j = j_from_z(&zeta, 2)?;
    let j_golden = rf("L*(1 + (L - 1)*T + (L^6 - L^5)*T^5 - L^7*T^6)", "(1 - L^7*T^6)*(1 - L*T)");
    checks.push(Check::assert("j-cusp", j.equal(&j_golden), "matches closed form"));
    let node_j = j_from_z(&motivic_zeta(&load_resolution(corpus::NODE_ZETA)?)?, 2)?;
    checks.push(Check::assert(
        "j-node",
        node_j.equal(&rf("2*L - 1 - L^2*T", "(1 - L*T)^2")),
        "matches closed form",
    ));

    // contact-order counts certify the cusp resolution data
    let series = zeta.series_expand(4)?;
    for p in [2u64, 3] {
        for n in 0..=4u32 {
            let point = std::collections::BTreeMap::from([(Var::new("L"), q(p as i64))]);
            let value =
                series.coeff(n as usize).eval(&point)? * Rational::from_integer(BigInt::from(p).pow(2 * n));
            let brute = count_contact(&cusp, p, n, opts)?;
            checks.push(Check::compare(
                format!("contact-cusp-p{p}-n{n}"),
                brute,
                format!("{}", value),
            ));
        }
    }

    // topological zeta function, poles, monodromy
    let ztop = z_top(&cusp_doc)?;
    checks.push(Check::assert(
        "ztop-cusp",
        ztop.equal(&rf("5 + 4*s", "(5 + 6*s)*(1 + s)")),
        format!("{ztop}"),
    ));
    let poles = extract_poles(&ztop, &candidate_poles(&cusp_doc))?;
    checks.push(Check::compare("ztop-cusp-poles", "[-1, -5/6]", poles.to_string()));
    let eigen = EigenvalueSet::new([q(0), qq(1, 6), qq(5, 6)]);
    let verdicts = monodromy_check(&poles, &eigen);
    checks.push(Check::assert(
        "monodromy-cusp",
        verdicts.iter().all(|v| v.satisfied),
        "all poles give listed eigenvalues",
    ));

    // proper birational class identity for the blow-up of the plane
    let blowup = load_resolution(corpus::BLOWUP_IDENTITY)?;
    checks.push(Check::assert(
        "identity-blowup",
        birational_identity(&blowup, &parse_poly("L^2")?)?,
        "[X] and chi identities hold",
    ));

    // stringy invariants
    let inv = stringy_invariants(&load_resolution(corpus::Z2XY_STRINGY)?)?;
    checks.push(Check::compare("stringy-z2xy-e", "2", format!("{}", inv.euler)));
    checks.push(Check::assert(
        "stringy-z2xy-class",
        inv.class_l.as_ref().unwrap().to_ratfunc()?.equal(&rf("L^2 + L", "1")),
        "cal E_st = L^2 + L",
    ));
    let fermat = stringy_invariants(&load_resolution(corpus::FERMAT_STRINGY)?)?;
    let cal = fermat.class_l.as_ref().unwrap();
    let termwise = cal.terms().len() == 2
        && cal.terms()[0].coeff == parse_poly("(L - 1)*E")?
        && cal.terms()[0].factors.is_empty()
        && cal.terms()[1].coeff == parse_poly("E")?
        && cal.terms()[1].factors.len() == 1
        && *cal.terms()[1].factors[0].nu() == q(2);
    checks.push(Check::assert("stringy-fermat-termwise", termwise, "(L-1)E + E(L-1)/(L^2-1)"));
    checks.push(Check::compare("stringy-fermat-e", "2", format!("{}", fermat.euler)));

    // classification trichotomy for the Fermat family
    let d = 3i64;
    let tri = (1..=7i64).all(|k| {
        let class = classify(&[q(d + 1 - k)]);
        match k.cmp(&(d + 1)) {
            std::cmp::Ordering::Less => class.is_log_terminal(),
            std::cmp::Ordering::Equal => class == motivic_core::SingularityClass::StrictlyLogCanonical,
            std::cmp::Ordering::Greater => class == motivic_core::SingularityClass::NotLogCanonical,
        }
    });
    checks.push(Check::assert("classify-fermat-trichotomy", tri, "k vs d+1"));

    // stringy zeta function of the threefold and the log terminal constant
    let threefold = load_resolution(corpus::THREEFOLD_STRINGY_ZETA)?;
    let z = stringy_zeta(&threefold)?;
    checks.push(Check::assert("stringy-zeta-threefold", z.equal(&rf("13", "s")), format!("{z}")));
    checks.push(Check::compare("stringy-zeta-threefold-limit", "13", format!("{}", limit_s1(&z)?)));
    let lt = load_resolution(corpus::Z2XY_STRINGY_ZETA)?;
    let zlt = stringy_zeta(&lt)?;
    checks.push(Check::compare(
        "stringy-zeta-log-terminal-constant",
        "2",
        zlt.as_constant().map(|c| c.to_string()).unwrap_or_else(|| zlt.to_string()),
    ));

    // Seifert data of the (2,3,7) triangle
    let seifert = seifert_e_st(&SeifertData::parse(corpus::TRIANGLE_SEIFERT)?)?;
    checks.push(Check::compare("seifert-triangle-a", "-1", format!("{}", seifert.a)));
    checks.push(Check::compare("seifert-triangle-e", "-11 + chi(X\\{P})", seifert.e_st.to_string()));
    checks.push(Check::compare("seifert-triangle-d", "1", seifert.d_derived.to_string()));

    // specialization-chain commutativity on concrete stringy documents
    for (name, doc) in [("z2xy", corpus::Z2XY_STRINGY), ("fermat-d3-k2", corpus::FERMAT_D3K2_STRINGY)] {
        let inv = stringy_invariants(&load_resolution(doc)?)?;
        let via_hodge = inv.hodge.as_ref().unwrap().specialize_chi()?;
        checks.push(Check::compare(
            format!("chain-commutes-{name}"),
            format!("{}", inv.euler),
            format!("{via_hodge}"),
        ));
    }

    // pole containment on all zeta documents
    for (name, doc) in corpus::zeta_documents() {
        let data = load_resolution(doc)?;
        let contained = poles_contained(&z_top(&data)?, &candidate_poles(&data))?;
        checks.push(Check::assert(format!("pole-containment-{name}"), contained, "poles among candidates"));
    }

    // truncation coherence of jet systems
    for (name, sys) in [("cusp", &cusp), ("node", &node), ("parabola", &parabola)] {
        let coherent = (1..=4usize).all(|n| {
            let full = jet_equations(sys, n).unwrap();
            let lower = jet_equations(sys, n - 1).unwrap();
            full.truncated().unwrap() == lower
        });
        checks.push(Check::assert(format!("jet-truncation-{name}"), coherent, "levels nest"));
    }

    // parallel counting agrees with sequential counting
    let seq = count_congruence(&cusp, 3, 4, &CountOptions { threads: 1, ..*opts })?;
    let par = count_congruence(&cusp, 3, 4, &CountOptions { threads: 4, ..*opts })?;
    checks.push(Check::compare("parallel-vs-sequential", seq, par));

    // loading back every serialized document reproduces it
    for (name, doc) in corpus::resolution_documents() {
        let data = load_resolution(doc)?;
        let roundtrip = load_resolution(&data.serialize())?;
        checks.push(Check::assert(format!("roundtrip-{name}"), roundtrip == data, "load o serialize = id"));
    }

    // a numeric chi-complement substitution shifts the threefold limit
    let mut with_complement = threefold.clone();
    with_complement.strata.push(motivic_core::StratumRecord {
        subset: Default::default(),
        chi: q(5),
        hodge: None,
        class_l: None,
    });
    let z5 = stringy_zeta(&with_complement)?;
    checks.push(Check::compare("stringy-zeta-threefold-limit-chi5", "18", format!("{}", limit_s1(&z5)?)));

    Ok(())
}
