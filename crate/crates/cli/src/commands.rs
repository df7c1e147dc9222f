use std::cmp::Ordering;
use std::io::Write;

use serde::Serialize;
use wdbounds::exact::{format_decimal, DEFAULT_PRECISION_CAP};
use wdbounds::oracle::MIN_PRECISION;
use wdbounds::{
    pi_sign, verify_pair, wilker_error_table, wilker_gap_constant, BoundPair, OddPolyBound,
    PiConstant, Status, Target,
};

use crate::args::{BoundsArgs, CoeffsArgs, Mode, TableArgs, VerifyArgs, MAX_INDEX};
use crate::output::{write_records, Failure, NoExtra};

const MAX_DIGITS: usize = 100_000;

fn check_digits(digits: usize) -> Result<(), Failure> {
    if digits == 0 || digits > MAX_DIGITS {
        return Err(Failure::usage(format!(
            "digits must be in 1..={MAX_DIGITS}"
        )));
    }
    Ok(())
}

fn check_prec(prec: u32) -> Result<(), Failure> {
    if !(MIN_PRECISION..=DEFAULT_PRECISION_CAP).contains(&prec) {
        return Err(Failure::usage(format!(
            "prec must be in {MIN_PRECISION}..={DEFAULT_PRECISION_CAP}"
        )));
    }
    Ok(())
}

fn render(c: &PiConstant, mode: Mode, digits: usize) -> String {
    match mode {
        Mode::Exact => c.to_string(),
        Mode::Decimal => format_decimal(c, digits),
    }
}

#[derive(Serialize)]
struct CoeffsEcho {
    name: &'static str,
    seq: &'static str,
    from: usize,
    to: usize,
    mode: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    digits: Option<usize>,
}

#[derive(Serialize)]
struct CoeffRecord {
    m: usize,
    value: String,
}

pub fn coeffs(args: &CoeffsArgs, out: &mut impl Write) -> Result<u8, Failure> {
    check_digits(args.digits)?;
    if args.from > args.to || args.to > MAX_INDEX {
        return Err(Failure::usage(format!(
            "index range must satisfy 0 ≤ from ≤ to ≤ {MAX_INDEX}, got {}..{}",
            args.from, args.to
        )));
    }
    let id = args.seq.id();
    let records: Vec<CoeffRecord> = (args.from..=args.to)
        .map(|m| CoeffRecord {
            m,
            value: render(&id.value(m), args.mode, args.digits),
        })
        .collect();
    let echo = CoeffsEcho {
        name: "coeffs",
        seq: args.seq.name(),
        from: args.from,
        to: args.to,
        mode: args.mode.name(),
        digits: (args.mode == Mode::Decimal).then_some(args.digits),
    };
    write_records(out, args.output.format, &echo, &NoExtra {}, &records)?;
    Ok(0)
}

#[derive(Serialize)]
struct BoundsEcho {
    name: &'static str,
    target: &'static str,
    order: usize,
    mode: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    digits: Option<usize>,
}

#[derive(Serialize)]
struct BoundsInfo {
    domain: String,
    denominator: &'static str,
}

#[derive(Serialize)]
struct TermRecord {
    side: &'static str,
    degree: u32,
    coeff: String,
    denominator: &'static str,
}

fn term_records(
    bound: &OddPolyBound,
    side: &'static str,
    mode: Mode,
    digits: usize,
) -> Vec<TermRecord> {
    bound
        .poly
        .terms()
        .iter()
        .map(|(degree, c)| TermRecord {
            side,
            degree: *degree,
            coeff: render(c, mode, digits),
            denominator: bound.denominator.name(),
        })
        .collect()
}

pub fn bounds(args: &BoundsArgs, out: &mut impl Write) -> Result<u8, Failure> {
    check_digits(args.digits)?;
    let target = Target::from(args.target);
    let pair = target.bounds(args.order)?;
    let mut records = term_records(&pair.lower, "lower", args.mode, args.digits);
    records.extend(term_records(&pair.upper, "upper", args.mode, args.digits));
    let echo = BoundsEcho {
        name: "bounds",
        target: target.name(),
        order: args.order,
        mode: args.mode.name(),
        digits: (args.mode == Mode::Decimal).then_some(args.digits),
    };
    let info = BoundsInfo {
        domain: format!("[0, {}]", target.domain().name()),
        denominator: target.denominator().name(),
    };
    write_records(out, args.output.format, &echo, &info, &records)?;
    Ok(0)
}

#[derive(Serialize)]
struct VerifyEcho {
    name: &'static str,
    target: &'static str,
    order: usize,
    grid: usize,
    prec: u32,
    digits: usize,
}

#[derive(Serialize)]
struct ReportRecord {
    target: &'static str,
    order: usize,
    grid_points: usize,
    precision_bits: u32,
    min_lower_margin: String,
    min_upper_margin: String,
    max_gap: String,
    argmax_x: String,
    status: &'static str,
}

pub fn exit_code(status: Status) -> u8 {
    match status {
        Status::Verified => 0,
        Status::Violated => 1,
        Status::Indeterminate => 3,
    }
}

fn check_pair(
    pair: &BoundPair,
    grid: usize,
    prec: u32,
    digits: usize,
) -> Result<(ReportRecord, u8), Failure> {
    let report = verify_pair(pair, grid, prec)?;
    let record = ReportRecord {
        target: pair.target.name(),
        order: report.order,
        grid_points: report.grid_points,
        precision_bits: report.precision_bits,
        min_lower_margin: report.min_lower_margin.to_decimal(digits),
        min_upper_margin: report.min_upper_margin.to_decimal(digits),
        max_gap: report.max_gap.to_decimal(digits),
        argmax_x: report.argmax_x.to_decimal(digits),
        status: report.status.name(),
    };
    Ok((record, exit_code(report.status)))
}

pub fn verify(args: &VerifyArgs, out: &mut impl Write) -> Result<u8, Failure> {
    check_digits(args.digits)?;
    check_prec(args.prec)?;
    let target = Target::from(args.target);
    let pair = target.bounds(args.order)?;
    let (record, code) = check_pair(&pair, args.grid, args.prec, args.digits)?;
    let echo = VerifyEcho {
        name: "verify",
        target: target.name(),
        order: args.order,
        grid: args.grid,
        prec: args.prec,
        digits: args.digits,
    };
    write_records(out, args.output.format, &echo, &NoExtra {}, &[record])?;
    Ok(code)
}

/// Parses `a..b` (inclusive), `a..=b` or a single order.
pub fn parse_orders(s: &str) -> Result<(usize, usize), Failure> {
    let bad = || Failure::usage(format!("orders must look like 3..6 or 4, got {s:?}"));
    let num = |t: &str| t.trim().parse::<usize>().map_err(|_| bad());
    let (a, b) = match s.split_once("..") {
        Some((a, b)) => (num(a)?, num(b.strip_prefix('=').unwrap_or(b))?),
        None => {
            let a = num(s)?;
            (a, a)
        }
    };
    if a > b {
        return Err(Failure::usage(format!("empty order range {s:?}")));
    }
    if b > MAX_INDEX {
        return Err(Failure::usage(format!(
            "orders must not exceed {MAX_INDEX}"
        )));
    }
    Ok((a, b))
}

#[derive(Serialize)]
struct TableEcho {
    name: &'static str,
    target: &'static str,
    orders: String,
    prec: u32,
    mode: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    digits: Option<usize>,
}

#[derive(Serialize)]
struct TableRecord {
    m: usize,
    sup_gap: String,
}

pub fn table(args: &TableArgs, out: &mut impl Write) -> Result<u8, Failure> {
    check_digits(args.digits)?;
    check_prec(args.prec)?;
    let target = Target::from(args.target);
    if target != Target::Wilker {
        return Err(Failure::usage(
            "table is defined for the wilker target only",
        ));
    }
    let (a, b) = parse_orders(&args.orders)?;
    let orders: Vec<usize> = (a..=b).collect();
    let records = match args.mode {
        Mode::Decimal => wilker_error_table(&orders, args.prec)?
            .into_iter()
            .map(|row| TableRecord {
                m: row.m,
                sup_gap: row.sup_gap.to_decimal(args.digits),
            })
            .collect::<Vec<_>>(),
        Mode::Exact => orders
            .iter()
            .map(|&m| {
                let g = wilker_gap_constant(m)?;
                if pi_sign(&g)? != Ordering::Greater {
                    return Err(Failure::usage(format!(
                        "no closed-form supremum for m = {m}"
                    )));
                }
                Ok(TableRecord {
                    m,
                    sup_gap: g.to_string(),
                })
            })
            .collect::<Result<Vec<_>, Failure>>()?,
    };
    let echo = TableEcho {
        name: "table",
        target: target.name(),
        orders: format!("{a}..{b}"),
        prec: args.prec,
        mode: args.mode.name(),
        digits: (args.mode == Mode::Decimal).then_some(args.digits),
    };
    write_records(out, args.output.format, &echo, &NoExtra {}, &records)?;
    Ok(0)
}
