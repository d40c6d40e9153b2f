use std::fs;

use rug::ops::Pow;
use rug::{Float, Integer};
use serde_json::{json, Value};

use crate::curves::{
    a3, a3_beta_form, a4, a4_beta_form, a7, a7_beta_form, build_symmetric_trigonal, build_table1,
    charge2_es_check_scaled, check_h1, primitive_check, Sign, SpectralCurve, Table1Params,
};
use crate::error::{Error, Result};
use crate::intrel::{algebraicity_probe, find_relation, format_polynomial};
use crate::modeq::{es_solve, ramanujan_sum, ESPair, RamanujanSeries};
use crate::numkernel::PrecisionContext;
use crate::specfun::{
    ellip_e, ellip_k, hyp2f1_unit, hyp_euler_integral, weier_half_period, EllipticModulus,
    Signature, WeierstrassInvariants,
};

use super::expr::{eval, eval_integer};
use super::report::{complex, real, RunReport, Verdict};
use super::{Command, CurveCommand, Reproduce, RowParams, Verify};

/// Closed forms `(n, m, t, b)` of the trigonal table.
pub const TABLE2: [(i64, i64, &str, &str); 5] = [
    (2, 1, "1/2", "0"),
    (1, 0, "1/2 + 5*sqrt(3)/18", "5*sqrt(2)"),
    (1, 1, "1/2 - 5*sqrt(3)/18", "5*sqrt(2)"),
    (
        4,
        -1,
        "(63 + 171*2^(1/3) - 18*4^(1/3))/250",
        "(44 + 38*2^(1/3) + 26*4^(1/3))/3",
    ),
    (
        5,
        -2,
        "1/2 + (153*sqrt(3) - 99*sqrt(2))/250",
        "9*sqrt(458 + 187*sqrt(6))",
    ),
];

pub fn dispatch(cmd: &Command, ctx: &PrecisionContext) -> Result<RunReport> {
    match cmd {
        Command::Reproduce {
            what: Reproduce::Table2 { row },
        } => reproduce_table2(row.as_deref(), ctx),
        Command::Verify { target } => match target {
            Verify::H1 { params, pair, file } => {
                verify_h1(params, pair.as_deref(), file.as_deref(), ctx)
            }
            Verify::Table1Constants => verify_table1_constants(ctx),
            Verify::Charge2Es { k, factor } => verify_charge2(k, factor.as_deref(), ctx),
            Verify::Ramanujan { series, terms } => verify_ramanujan(*series, *terms, ctx),
            Verify::HypIntegral { t } => verify_hyp_integral(t, ctx),
            Verify::Legendre { k } => verify_legendre(k, ctx),
        },
        Command::Probe { expr, dmax, hmax } => probe(expr, *dmax, hmax, ctx),
        Command::EsSolve { n, m } => es_solve_cmd(*n, *m, ctx),
        Command::Curve {
            action: CurveCommand::Build { params, pair, out },
        } => curve_build(params, pair.as_deref(), out.as_deref(), ctx),
        Command::Relation { values, max_norm } => relation(values, max_norm, ctx),
    }
}

/// `|a - b| / max(1, |b|)`.
fn scaled_residual(a: &Float, b: &Float, ctx: &PrecisionContext) -> Float {
    ctx.real(a - b).abs() / ctx.real(b.abs_ref()).max(&ctx.one())
}

fn parse_pair(text: &str, ctx: &PrecisionContext) -> Result<ESPair> {
    let (n, m) = text
        .trim_matches(|c| c == '(' || c == ')')
        .split_once(',')
        .ok_or_else(|| Error::Parse(format!("pair must look like \"n,m\", got {text:?}")))?;
    ESPair::new(eval_integer(n, ctx)?, eval_integer(m, ctx)?)
}

fn parse_bound(text: &str, ctx: &PrecisionContext) -> Result<Integer> {
    if let Ok(i) = text.trim().parse::<Integer>() {
        return Ok(i);
    }
    let wide = ctx.scaled(2);
    let v = eval(text, &wide)?;
    if !v.is_integer() {
        return Err(Error::Parse(format!("bound {text:?} is not an integer")));
    }
    Ok(v.to_integer().expect("finite"))
}

fn reproduce_table2(row: Option<&str>, ctx: &PrecisionContext) -> Result<RunReport> {
    let mut report = RunReport::new("reproduce table2", ctx.digits());
    report.input("row", row.unwrap_or("all"));
    let selected: Vec<_> = match row {
        Some(text) => {
            let pair = parse_pair(text, ctx)?;
            let rows: Vec<_> = TABLE2
                .iter()
                .filter(|r| r.0 == pair.n() && r.1 == pair.m())
                .collect();
            if rows.is_empty() {
                return Err(Error::domain(format!("pair {pair} is not in the table")));
            }
            rows
        }
        None => TABLE2.iter().collect(),
    };
    let tol = ctx.tolerance();
    for (n, m, t_form, b_form) in selected {
        let pair = ESPair::new(*n, *m)?;
        let key = pair.to_string();
        let data = es_solve(pair, ctx)?;
        let t_exp = eval(t_form, ctx)?;
        let b_exp = eval(b_form, ctx)?;
        let rt = ctx.real(&data.t - &t_exp).abs();
        let rb = ctx.real(&data.b - &b_exp).abs();
        report.result(
            &key,
            json!({
                "t": real(&data.t),
                "b": real(&data.b),
                "b_signed": real(&data.b_raw),
                "t_closed_form": t_form,
                "b_closed_form": b_form,
            }),
        );
        report.residual(&format!("{key}.t"), &rt);
        report.residual(&format!("{key}.b"), &rb);
        report.verdict(&key, Verdict::from_bool(rt <= tol && rb <= tol));
    }
    Ok(report)
}

fn opt_eval(name: &str, v: &Option<String>, ctx: &PrecisionContext) -> Result<Float> {
    let text = v
        .as_deref()
        .ok_or_else(|| Error::domain(format!("this row needs --{name}")))?;
    eval(text, ctx)
}

fn parse_sign(v: &Option<String>) -> Result<Sign> {
    match v.as_deref() {
        None | Some("+") | Some("plus") => Ok(Sign::Plus),
        Some("-") | Some("minus") => Ok(Sign::Minus),
        Some(other) => Err(Error::Parse(format!("sign must be + or -, got {other:?}"))),
    }
}

pub fn row_params(p: &RowParams, ctx: &PrecisionContext) -> Result<Table1Params> {
    let row = p.row.ok_or_else(|| Error::domain("--row is required"))?;
    Ok(match row {
        1 => Table1Params::Row1 {
            m: p.m.unwrap_or(1),
        },
        2 => Table1Params::Row2 {
            m: p.m.unwrap_or(1),
        },
        3 => Table1Params::Row3 {
            k: opt_eval("k", &p.k, ctx)?,
        },
        4 => Table1Params::Row4 {
            sign: parse_sign(&p.sign)?,
        },
        5 => Table1Params::Row5,
        6 => Table1Params::Row6,
        7 => Table1Params::Row7 {
            sign: parse_sign(&p.sign)?,
        },
        8 => Table1Params::Row8 {
            a: opt_eval("a", &p.a, ctx)?,
        },
        9 => {
            let eps = p.epsilon.as_deref().unwrap_or("1");
            let epsilon = i32::try_from(eval_integer(eps, ctx)?)
                .map_err(|_| Error::domain("epsilon must be ±1"))?;
            Table1Params::Row9 {
                a: opt_eval("a", &p.a, ctx)?,
                epsilon,
            }
        }
        10 => Table1Params::Row10 {
            alpha: opt_eval("alpha", &p.alpha, ctx)?,
            beta: opt_eval("beta", &p.beta, ctx)?,
            gamma: opt_eval("gamma", &p.gamma, ctx)?,
        },
        other => return Err(Error::domain(format!("row must be 1..10, got {other}"))),
    })
}

/// Sampled parameters for every table row.
pub fn h1_suite(ctx: &PrecisionContext) -> Vec<(String, Table1Params)> {
    let mut out = Vec::new();
    for m in 1..=3 {
        out.push((format!("row 1 m={m}"), Table1Params::Row1 { m }));
    }
    for m in 1..=2 {
        out.push((format!("row 2 m={m}"), Table1Params::Row2 { m }));
    }
    for (label, k) in [
        ("0.3", ctx.ratio(3, 10)),
        ("1/sqrt(2)", ctx.ratio(1, 2).sqrt()),
        ("0.9", ctx.ratio(9, 10)),
    ] {
        out.push((format!("row 3 k={label}"), Table1Params::Row3 { k }));
    }
    for (label, sign) in [("+", Sign::Plus), ("-", Sign::Minus)] {
        out.push((format!("row 4 sign={label}"), Table1Params::Row4 { sign }));
    }
    out.push(("row 5".into(), Table1Params::Row5));
    out.push(("row 6".into(), Table1Params::Row6));
    for (label, sign) in [("+", Sign::Plus), ("-", Sign::Minus)] {
        out.push((format!("row 7 sign={label}"), Table1Params::Row7 { sign }));
    }
    for (label, a) in [("0.1", ctx.ratio(1, 10)), ("-0.3", ctx.ratio(-3, 10))] {
        out.push((format!("row 8 a={label}"), Table1Params::Row8 { a }));
    }
    out.push((
        "row 9 a=1 eps=1".into(),
        Table1Params::Row9 {
            a: ctx.one(),
            epsilon: 1,
        },
    ));
    out.push((
        "row 9 a=3 eps=-1".into(),
        Table1Params::Row9 {
            a: ctx.real(3),
            epsilon: -1,
        },
    ));
    out.push((
        "row 10".into(),
        Table1Params::Row10 {
            alpha: ctx.real(-2),
            beta: ctx.ratio(1, 3),
            gamma: ctx.real(5),
        },
    ));
    out
}

fn record_h1(report: &mut RunReport, key: &str, curve: &SpectralCurve, ctx: &PrecisionContext) {
    let h1 = check_h1(curve, ctx);
    let violations: Vec<Value> = h1
        .violations
        .iter()
        .map(|v| json!({ "r": v.r, "j": v.j, "residual": real(&v.residual) }))
        .collect();
    report.result(key, json!({ "n": curve.n(), "violations": violations }));
    report.residual(key, &h1.max_residual);
    report.verdict(key, Verdict::from_bool(h1.passed));
}

fn verify_h1(
    params: &RowParams,
    pair: Option<&str>,
    file: Option<&std::path::Path>,
    ctx: &PrecisionContext,
) -> Result<RunReport> {
    let mut report = RunReport::new("verify h1", ctx.digits());
    if let Some(path) = file {
        report.input("file", path.display());
        let text = fs::read_to_string(path)?;
        let curve = SpectralCurve::from_json(&text, ctx)?;
        record_h1(&mut report, "file", &curve, ctx);
        return Ok(report);
    }
    if let Some(text) = pair {
        let pair = parse_pair(text, ctx)?;
        report.input("pair", pair);
        let curve = build_symmetric_trigonal(pair, ctx)?;
        record_h1(&mut report, &format!("trigonal {pair}"), &curve, ctx);
        return Ok(report);
    }
    if params.row.is_some() {
        let p = row_params(params, ctx)?;
        echo_params(&mut report, params);
        let curve = build_table1(&p, ctx)?;
        record_h1(&mut report, &format!("row {}", p.row()), &curve, ctx);
        return Ok(report);
    }
    report.input("suite", "table rows 1-10 and trigonal pairs");
    for (label, p) in h1_suite(ctx) {
        let curve = build_table1(&p, ctx)?;
        record_h1(&mut report, &label, &curve, ctx);
    }
    for (n, m, _, _) in TABLE2 {
        let pair = ESPair::new(n, m)?;
        let curve = build_symmetric_trigonal(pair, ctx)?;
        record_h1(&mut report, &format!("trigonal {pair}"), &curve, ctx);
    }
    Ok(report)
}

fn echo_params(report: &mut RunReport, p: &RowParams) {
    if let Some(r) = p.row {
        report.input("row", r);
    }
    let fields = [
        ("k", &p.k),
        ("sign", &p.sign),
        ("a", &p.a),
        ("epsilon", &p.epsilon),
        ("alpha", &p.alpha),
        ("beta", &p.beta),
        ("gamma", &p.gamma),
    ];
    for (name, v) in fields {
        if let Some(v) = v {
            report.input(name, v);
        }
    }
    if let Some(m) = p.m {
        report.input("m", m);
    }
}

/// Γ and Beta forms of `a₃, a₄, a₇`, and `3κ⁴ = a₄` for `g2 = 4, g3 = 0`.
pub fn table1_constant_pairs(ctx: &PrecisionContext) -> Result<Vec<(&'static str, Float, Float)>> {
    let kappa = weier_half_period(
        &WeierstrassInvariants::new(ctx.real(4), ctx.zero(), ctx)?,
        ctx,
    )?;
    Ok(vec![
        ("a3", a3(ctx)?, a3_beta_form(ctx)?),
        ("a4", a4(ctx)?, a4_beta_form(ctx)?),
        ("a7", a7(ctx)?, a7_beta_form(ctx)?),
        ("a4 = 3 kappa^4", kappa.pow(4u32) * 3u32, a4(ctx)?),
    ])
}

fn verify_table1_constants(ctx: &PrecisionContext) -> Result<RunReport> {
    let mut report = RunReport::new("verify table1-constants", ctx.digits());
    for (name, lhs, rhs) in table1_constant_pairs(ctx)? {
        let r = scaled_residual(&lhs, &rhs, ctx);
        report.result(name, json!({ "lhs": real(&lhs), "rhs": real(&rhs) }));
        report.residual(name, &r);
        report.verdict(name, Verdict::from_bool(r <= ctx.tolerance()));
    }
    Ok(report)
}

fn verify_charge2(
    ks: &[String],
    factor: Option<&str>,
    ctx: &PrecisionContext,
) -> Result<RunReport> {
    let mut report = RunReport::new("verify charge2-es", ctx.digits());
    let defaults = [
        "0.3".to_string(),
        "sqrt(1/2)".to_string(),
        "0.9".to_string(),
    ];
    let ks = if ks.is_empty() { &defaults[..] } else { ks };
    let factor_text = factor.unwrap_or("1");
    let factor = eval(factor_text, ctx)?;
    report.input("factor", factor_text);
    report.input("k", ks.join(" "));
    report.input("max_coeff", crate::curves::MAX_COEFF);
    report.input("threshold", format!("1e-{}", ctx.digits() - 15));
    for text in ks {
        let k = eval(text, ctx)?;
        let key = format!("k={text}");
        match charge2_es_check_scaled(&k, &factor, ctx) {
            Ok(check) => {
                let primitive = primitive_check(&check.relation)?;
                report.result(
                    &key,
                    json!({
                        "p1": complex(&check.periods.p1),
                        "p2": complex(&check.periods.p2),
                        "u": check.relation.a[0],
                        "v": check.relation.b[0],
                        "primitive": primitive,
                    }),
                );
                report.residual(&key, &check.residual);
                report.verdict(&key, Verdict::from_bool(primitive));
            }
            Err(Error::NoPeriodRelation { p1, p2, residual }) => {
                report.result(
                    &key,
                    json!({ "p1": complex(&p1), "p2": complex(&p2), "nearest_residual": residual }),
                );
                report.verdict(&key, Verdict::Fail);
            }
            Err(other) => return Err(other),
        }
    }
    Ok(report)
}

fn verify_ramanujan(
    series: Option<u32>,
    terms: Option<u32>,
    ctx: &PrecisionContext,
) -> Result<RunReport> {
    let mut report = RunReport::new("verify ramanujan", ctx.digits());
    let ids: Vec<u32> = match series {
        Some(id) => vec![id],
        None => vec![1, 2],
    };
    for id in ids {
        let s = RamanujanSeries::from_id(id)?;
        let n = terms.unwrap_or_else(|| s.terms_for_digits(ctx.digits()));
        let sum = ramanujan_sum(s, n, ctx);
        let limit = s.limit(ctx);
        let key = match s {
            RamanujanSeries::FourOverPi => "4/pi",
            RamanujanSeries::TwentySevenOverFourPi => "27/(4pi)",
        };
        let r = scaled_residual(&sum, &limit, ctx);
        report.input(&format!("{key}.terms"), n);
        report.result(
            key,
            json!({ "partial_sum": real(&sum), "limit": real(&limit), "rate": s.rate() }),
        );
        report.residual(key, &r);
        report.verdict(key, Verdict::from_bool(r <= ctx.tolerance()));
    }
    Ok(report)
}

fn verify_hyp_integral(ts: &[String], ctx: &PrecisionContext) -> Result<RunReport> {
    let mut report = RunReport::new("verify hyp-integral", ctx.digits());
    let defaults = ["0.1".to_string(), "0.3".to_string(), "0.7".to_string()];
    let ts = if ts.is_empty() { &defaults[..] } else { ts };
    let sig = Signature::new(3)?;
    for text in ts {
        let t = eval(text, ctx)?;
        let lhs = ctx.pi() * hyp2f1_unit(sig, &t, ctx)?;
        let rhs = hyp_euler_integral(&t, ctx)?;
        let key = format!("t={text}");
        let r = scaled_residual(&lhs, &rhs, ctx);
        report.result(
            &key,
            json!({ "series": real(&lhs), "integral": real(&rhs) }),
        );
        report.residual(&key, &r);
        report.verdict(&key, Verdict::from_bool(r <= ctx.tolerance()));
    }
    Ok(report)
}

/// `E(k)K(k') + E(k')K(k) - K(k)K(k')`.
pub fn legendre_lhs(k: &Float, ctx: &PrecisionContext) -> Result<Float> {
    let m = EllipticModulus::new(k, ctx)?;
    let mc = m.complementary();
    let (kk, kc) = (ellip_k(&m, ctx)?, ellip_k(&mc, ctx)?);
    let (ek, ec) = (ellip_e(&m, ctx)?, ellip_e(&mc, ctx)?);
    Ok(ctx.real(&ek * &kc) + ctx.real(&ec * &kk) - ctx.real(&kk * &kc))
}

fn verify_legendre(ks: &[String], ctx: &PrecisionContext) -> Result<RunReport> {
    let mut report = RunReport::new("verify legendre", ctx.digits());
    let defaults = ["0.2".to_string(), "0.5".to_string(), "0.8".to_string()];
    let ks = if ks.is_empty() { &defaults[..] } else { ks };
    let half_pi = ctx.pi() / 2u32;
    for text in ks {
        let lhs = legendre_lhs(&eval(text, ctx)?, ctx)?;
        let key = format!("k={text}");
        let r = scaled_residual(&lhs, &half_pi, ctx);
        report.result(&key, real(&lhs));
        report.residual(&key, &r);
        report.verdict(&key, Verdict::from_bool(r <= ctx.tolerance()));
    }
    Ok(report)
}

fn probe(expr: &str, dmax: u32, hmax: &str, ctx: &PrecisionContext) -> Result<RunReport> {
    let mut report = RunReport::new("probe", ctx.digits());
    let hmax = parse_bound(hmax, ctx)?;
    report.input("expr", expr);
    report.input("dmax", dmax);
    report.input("hmax", &hmax);
    let x = eval(expr, ctx)?;
    let found = algebraicity_probe(&x, dmax, &hmax, ctx)?;
    report.result("value", real(&x));
    match (&found.found, &found.residual) {
        (Some(coeffs), Some(residual)) => {
            let list: Vec<String> = coeffs.iter().map(|c| c.to_string()).collect();
            report.result(
                "polynomial",
                json!({ "text": format_polynomial(coeffs), "coefficients_low_to_high": list }),
            );
            report.residual("polynomial", residual);
        }
        _ => {
            report.result(
                "polynomial",
                json!(format!(
                    "none with degree <= {dmax} and height <= {hmax} at {} digits",
                    found.precision_used
                )),
            );
        }
    }
    Ok(report)
}

fn es_solve_cmd(n: i64, m: i64, ctx: &PrecisionContext) -> Result<RunReport> {
    let mut report = RunReport::new("es-solve", ctx.digits());
    report.input("n", n);
    report.input("m", m);
    let data = es_solve(ESPair::new(n, m)?, ctx)?;
    report.result("t", real(&data.t));
    report.result("one_minus_t", real(&data.one_minus_t));
    report.result("b", real(&data.b));
    report.result("b_signed", real(&data.b_raw));
    report.result("alpha", real(&data.alpha));
    report.result("chi", real(&data.chi));
    Ok(report)
}

fn curve_build(
    params: &RowParams,
    pair: Option<&str>,
    out: Option<&std::path::Path>,
    ctx: &PrecisionContext,
) -> Result<RunReport> {
    let mut report = RunReport::new("curve build", ctx.digits());
    let curve = match pair {
        Some(text) => {
            let pair = parse_pair(text, ctx)?;
            report.input("pair", pair);
            build_symmetric_trigonal(pair, ctx)?
        }
        None => {
            echo_params(&mut report, params);
            build_table1(&row_params(params, ctx)?, ctx)?
        }
    };
    let file = curve.to_file(ctx);
    report.result("curve", serde_json::to_value(&file)?);
    if let Some(path) = out {
        fs::write(path, curve.to_json(ctx)?)?;
        report.input("out", path.display());
    }
    Ok(report)
}

fn relation(path: &std::path::Path, max_norm: &str, ctx: &PrecisionContext) -> Result<RunReport> {
    let mut report = RunReport::new("relation", ctx.digits());
    let bound = parse_bound(max_norm, ctx)?;
    report.input("values", path.display());
    report.input("max_norm", &bound);
    let text = fs::read_to_string(path)?;
    let exprs: Vec<&str> = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .collect();
    let xs = exprs
        .iter()
        .map(|e| eval(e, ctx))
        .collect::<Result<Vec<_>>>()?;
    report.input("expressions", exprs.join("; "));
    match find_relation(&xs, &bound, ctx)? {
        Some(rel) => {
            let coeffs: Vec<String> = rel.coeffs.iter().map(|c| c.to_string()).collect();
            report.result("relation", json!(coeffs));
            report.residual("relation", &rel.residual);
        }
        None => report.result(
            "relation",
            json!(format!(
                "none with max norm <= {bound} at {} digits",
                ctx.digits()
            )),
        ),
    }
    Ok(report)
}
