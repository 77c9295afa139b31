use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use super::output::{parse_angle, Outcome};
use super::{ArithmeticArg, Cli, Command, Format, JyaMethod, TableKind, TableMode};
use crate::circumference::{refine_circumference_with, Arithmetic, Direction};
use crate::classical::{bhaskara_error_scan, bhaskara_sin, brahmagupta_arcsin, DegreeAngle};
use crate::decimal::{format_fixed, format_significant, parse_decimal};
use crate::error::{Error, Result};
use crate::large_arc::{arcsin_large, build_madhava_table};
use crate::lookup_table::{build_lookup_table, lookup_arc, LookupTable, Mode};
use crate::oracle::Precision;
use crate::sexagesimal::{format_sexagesimal, ArcThirds, RadiusConstant, RationalArc, Rounding};
use crate::small_arc::{
    a001764, arcsin_poly3, cubic_jya, default_cutoff, default_order, iterate_coeff_series,
    jya_series_terms, madhava_jya, variyar_arcsin,
};

fn whole(x: &RationalArc) -> ArcThirds {
    x.round(Rounding::Nearest)
}

fn sx(x: &RationalArc) -> String {
    format_sexagesimal(whole(x))
}

fn table_mode(mode: TableMode) -> Mode {
    match mode {
        TableMode::Commentary => Mode::Commentary,
        TableMode::Literal => Mode::Literal,
    }
}

fn csv_text(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| Error::Domain(format!("csv output failed: {e}"));
    w.write_record(header).map_err(io)?;
    for row in rows {
        w.write_record(&row).map_err(io)?;
    }
    let bytes = w
        .into_inner()
        .map_err(|e| Error::Domain(format!("csv output failed: {e}")))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

fn json_line(v: Value) -> String {
    format!("{v}\n")
}

pub fn execute(cli: &Cli) -> Result<String> {
    let unit = cli.unit;
    let radius = match &cli.radius {
        Some(text) => RadiusConstant::new(whole(&parse_angle(text, unit)?))?,
        None => RadiusConstant::TRIJYA,
    };
    let r = radius.thirds();
    let outcome = match &cli.command {
        Command::SinBhaskara { deg } => {
            let x = DegreeAngle::new(parse_decimal(deg)?);
            let sin = bhaskara_sin(&x)?;
            let mut o =
                Outcome::new("sin-bhaskara", r, &radius.to_rational() * &sin).input("deg", deg);
            o.ratio = Some(sin);
            o
        }
        Command::ArcsinBrahmagupta { jya } => {
            let m = parse_angle(jya, unit)?;
            let deg = brahmagupta_arcsin(&m, radius, Precision::DEFAULT)?;
            let arc = RationalArc::new(deg.degrees() * BigInt::from(60));
            let mut o = Outcome::new("arcsin-brahmagupta", r, arc).input("jya", jya);
            let deg_text = format_fixed(deg.degrees(), 12);
            o.trace_text.push(format!("angle_deg {deg_text}"));
            o.trace_json = Some(json!({ "angle_deg": deg_text }));
            o
        }
        Command::Jya { arc, method } => {
            let s = whole(&parse_angle(arc, unit)?);
            let (name, v) = match method {
                JyaMethod::Series => ("jya-series", madhava_jya(s, radius)?),
                JyaMethod::Cubic => ("jya-cubic", cubic_jya(s, radius)),
            };
            let mut o = Outcome::new(name, r, v.to_rational()).input("arc", arc);
            if *method == JyaMethod::Series {
                let terms = jya_series_terms(
                    &BigRational::from_integer(s.big()),
                    &BigRational::from_integer(r.big()),
                    &default_cutoff(),
                );
                let mut rows = Vec::new();
                for (i, t) in terms.iter().enumerate() {
                    let t = RationalArc::new(t / BigInt::from(3600));
                    o.trace_text.push(format!("term {} {}", i + 1, sx(&t)));
                    rows.push(
                        json!({ "i": i + 1, "term_thirds": format_fixed(&t.in_thirds(), 3) }),
                    );
                }
                o.trace_json = Some(Value::Array(rows));
            }
            o
        }
        Command::ArcsinSmall { jya } => {
            let m = whole(&parse_angle(jya, unit)?);
            Outcome::new("arcsin-small", r, arcsin_poly3(m, radius)?.to_rational())
                .input("jya", jya)
        }
        Command::ArcsinIter { jya, max_iter } => {
            let m = whole(&parse_angle(jya, unit)?);
            let (s, trace) = variyar_arcsin(m, radius, *max_iter)?;
            let mut o = Outcome::new("arcsin-iter", r, s.to_rational()).input("jya", jya);
            let mut rows = Vec::new();
            for step in &trace.steps {
                o.trace_text.push(format!(
                    "step {}: delta {} s {}",
                    step.index,
                    format_sexagesimal(step.delta),
                    format_sexagesimal(step.s)
                ));
                rows.push(json!({
                    "i": step.index,
                    "delta_thirds": step.delta.value(),
                    "s_thirds": step.s.value(),
                    "s_sexagesimal": format_sexagesimal(step.s),
                }));
            }
            o.trace_json = Some(Value::Array(rows));
            o
        }
        Command::ArcsinTable { jya, mode } => {
            let m = whole(&parse_angle(jya, unit)?);
            let table = build_lookup_table(&radius.to_rational(), table_mode(*mode));
            let hit = lookup_arc(&table, m)?;
            let mut o = Outcome::new("arcsin-table", r, hit.arc.to_rational()).input("jya", jya);
            o.trace_text.push(format!(
                "entry k={} jya {} arc {} distance {}",
                hit.entry.k,
                format_sexagesimal(hit.entry.jya),
                format_sexagesimal(hit.entry.arc),
                format_sexagesimal(hit.distance)
            ));
            o.trace_json = Some(json!({
                "k": hit.entry.k,
                "entry_jya_sexagesimal": format_sexagesimal(hit.entry.jya),
                "distance_thirds": hit.distance.value(),
            }));
            o
        }
        Command::ArcsinLarge { jya } => {
            let m = whole(&parse_angle(jya, unit)?);
            let table = build_madhava_table(radius);
            let res = arcsin_large(m, radius, &table)?;
            let mut o = Outcome::new("arcsin-large", r, res.s.to_rational()).input("jya", jya);
            o.trace_text.extend([
                format!(
                    "entry j={} s1 {} jya {} kojya {}",
                    res.entry,
                    format_sexagesimal(res.s1),
                    format_sexagesimal(table.jya(res.entry)),
                    format_sexagesimal(table.kojya(res.entry))
                ),
                format!("kojya(m) {}", format_sexagesimal(res.kojya_m)),
                format!("p {}", format_sexagesimal(res.p)),
            ]);
            o.trace_json = Some(json!({
                "entry": res.entry,
                "s1_thirds": res.s1.value(),
                "kojya_m_thirds": res.kojya_m.value(),
                "p_thirds": res.p.value(),
            }));
            o
        }
        Command::Circumference {
            diameter,
            approx,
            arithmetic,
        } => {
            let d = parse_angle(diameter, unit)?;
            let c_star = parse_angle(approx, unit)?;
            let mode = match arithmetic {
                ArithmeticArg::Hand => Arithmetic::Hand,
                ArithmeticArg::Exact => Arithmetic::Exact,
            };
            let (c, t) = refine_circumference_with(&d, &c_star, mode)?;
            let mut rows: Vec<(String, &RationalArc)> =
                vec![("D".into(), &t.d), ("C*".into(), &t.c_star)];
            for (i, term) in t.series_terms.iter().enumerate() {
                rows.push((format!("term {}", i + 1), term));
            }
            rows.extend([
                ("a*".into(), &t.a_star),
                ("(a*)^2".into(), &t.a_star_sq),
                ("(b*)^2".into(), &t.b_star_sq),
                ("sqrt((a*)^2/2)".into(), &t.sqrt_half_a),
                ("sqrt((b*)^2/2)".into(), &t.sqrt_half_b),
                ("Delta".into(), &t.delta_jya),
                ("delta".into(), &t.delta_arc),
                ("4 delta".into(), &t.correction),
                ("C".into(), &t.c),
            ]);
            let direction = match t.direction {
                Direction::Increase => "b* > a*: C = C* + 4 delta",
                Direction::Decrease => "a* > b*: C = C* - 4 delta",
                Direction::Equal => "a* = b*: C = C*",
            };
            let mut o = Outcome::new("circumference", r, c)
                .input("diameter", diameter)
                .input("approx", approx);
            o.trace_text = rows
                .iter()
                .map(|(label, v)| format!("{label:<16}{}", sx(v)))
                .collect();
            o.trace_text.push(direction.to_string());
            let mut obj = serde_json::Map::new();
            for (label, v) in &rows {
                obj.insert(label.clone(), json!(sx(v)));
            }
            obj.insert("direction".into(), json!(direction));
            o.trace_json = Some(Value::Object(obj));
            o
        }
        Command::Tables { which, mode } => return tables(cli, radius, *which, *mode),
        Command::ErrorScan { step } => return error_scan(cli, step),
        Command::Coeffs { n, order } => return coeffs(cli, *n, *order),
        Command::Convert { value, to } => {
            let v = parse_angle(value, unit)?;
            let o = Outcome::new("convert", r, v).input("value", value);
            return Ok(o.render(cli.format, to.unwrap_or(unit), cli.precision, cli.trace));
        }
    };
    Ok(outcome.render(cli.format, unit, cli.precision, cli.trace))
}

fn lookup_rows(
    table: &LookupTable,
) -> impl Iterator<Item = (u32, String, String, &'static str)> + '_ {
    table.entries.iter().map(|e| {
        (
            e.k,
            format_sexagesimal(e.jya),
            format_sexagesimal(e.arc),
            e.katapayadi_label,
        )
    })
}

fn tables(cli: &Cli, radius: RadiusConstant, which: TableKind, mode: TableMode) -> Result<String> {
    let json = cli.format == Format::Json;
    match which {
        TableKind::Madhava => {
            let t = build_madhava_table(radius);
            if json {
                let rows: Vec<Value> = t
                    .entries()
                    .map(|(j, arc, jya)| {
                        json!({
                            "j": j,
                            "arc_minutes": arc.value() / 3600,
                            "jya_sexagesimal": format_sexagesimal(jya),
                            "jya_thirds": jya.value(),
                        })
                    })
                    .collect();
                return Ok(json_line(
                    json!({ "table": "madhava", "radius_thirds": radius.thirds().value(), "rows": rows }),
                ));
            }
            csv_text(
                &["j", "arc_minutes", "jya_sexagesimal", "jya_thirds"],
                t.entries().map(|(j, arc, jya)| {
                    vec![
                        j.to_string(),
                        (arc.value() / 3600).to_string(),
                        format_sexagesimal(jya),
                        jya.value().to_string(),
                    ]
                }),
            )
        }
        TableKind::Lookup => {
            let t = build_lookup_table(&radius.to_rational(), table_mode(mode));
            if json {
                let rows: Vec<Value> = lookup_rows(&t)
                    .map(|(k, jya, arc, label)| {
                        json!({ "k": k, "jya_sexagesimal": jya, "arc_sexagesimal": arc, "katapayadi": label })
                    })
                    .collect();
                let mode = match mode {
                    TableMode::Commentary => "commentary",
                    TableMode::Literal => "literal",
                };
                return Ok(json_line(
                    json!({ "table": "lookup", "mode": mode, "rows": rows }),
                ));
            }
            csv_text(
                &["k", "jya_sexagesimal", "arc_sexagesimal", "katapayadi"],
                lookup_rows(&t)
                    .map(|(k, jya, arc, label)| vec![k.to_string(), jya, arc, label.to_string()]),
            )
        }
    }
}

const SCAN_DIGITS: u32 = 12;

fn error_scan(cli: &Cli, step: &str) -> Result<String> {
    let step_q = parse_decimal(step)?;
    let scan = bhaskara_error_scan(&step_q, Precision::DEFAULT)?;
    let sig = |x: &BigRational| format_significant(x, SCAN_DIGITS);
    let max = scan.max_row();
    if cli.format == Format::Json {
        let num = |x: &BigRational| json!(sig(x).parse::<f64>().unwrap_or(f64::NAN));
        let rows: Vec<Value> = scan
            .rows
            .iter()
            .map(|r| {
                json!({
                    "x_deg": num(&r.x),
                    "approx": num(&r.approx),
                    "exact": num(&r.exact),
                    "rel_err_percent": num(&r.rel_err_percent),
                })
            })
            .collect();
        return Ok(json_line(json!({
            "method": "error-scan",
            "step_deg": step,
            "rows": rows,
            "max": { "x_deg": num(&max.x), "rel_err_percent": num(&max.rel_err_percent) },
            "small_angle_limit_percent": num(&scan.small_angle_limit_percent),
        })));
    }
    let mut text = csv_text(
        &["x_deg", "approx", "exact", "rel_err_percent"],
        scan.rows.iter().map(|r| {
            vec![
                sig(&r.x),
                sig(&r.approx),
                sig(&r.exact),
                sig(&r.rel_err_percent),
            ]
        }),
    )?;
    text.push_str(&format!(
        "# max_rel_err_percent {} at x_deg {}\n# small_angle_limit_percent {}\n",
        sig(&max.rel_err_percent),
        sig(&max.x),
        sig(&scan.small_angle_limit_percent)
    ));
    Ok(text)
}

fn coeffs(cli: &Cli, n: usize, order: Option<usize>) -> Result<String> {
    let order = order.unwrap_or_else(|| default_order(n));
    let series = iterate_coeff_series(n, order)?;
    let reference: Vec<BigInt> = (0..=order as u64).map(a001764).collect();
    let agree: Vec<bool> = series
        .coeffs()
        .iter()
        .zip(&reference)
        .map(|(c, a)| c == a)
        .collect();
    let prefix = agree.iter().take_while(|&&b| b).count();
    if cli.format == Format::Json {
        let text = |v: &BigInt| match v.to_i64() {
            Some(i) => json!(i),
            None => json!(v.to_string()),
        };
        return Ok(json_line(json!({
            "method": "coeffs",
            "n": n,
            "order": order,
            "coefficients": series.coeffs().iter().map(text).collect::<Vec<_>>(),
            "a001764": reference.iter().map(text).collect::<Vec<_>>(),
            "agreeing_prefix": prefix,
        })));
    }
    let mut out = csv_text(
        &["grade", "coefficient", "a001764", "agrees"],
        series
            .coeffs()
            .iter()
            .zip(&reference)
            .enumerate()
            .map(|(a, (c, r))| {
                vec![
                    a.to_string(),
                    c.to_string(),
                    r.to_string(),
                    (c == r).to_string(),
                ]
            }),
    )?;
    out.push_str(&format!("# grades 0..{prefix} agree with A001764\n"));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cli::output::in_unit;
    use crate::cli::Unit;

    #[test]
    fn angle_units() {
        let m = parse_angle("90", Unit::Degrees).unwrap();
        assert_eq!(m, RationalArc::from_minutes(5400));
        assert_eq!(
            parse_angle("7200", Unit::Thirds).unwrap(),
            RationalArc::from_minutes(2)
        );
        assert_eq!(
            parse_angle("1'30''", Unit::Degrees).unwrap(),
            RationalArc::from_ratio(3, 2)
        );
        assert_eq!(
            in_unit(&RationalArc::from_minutes(90), Unit::Degrees),
            BigRational::new(3.into(), 2.into())
        );
        assert!(parse_angle("abc", Unit::Minutes).is_err());
    }
}
