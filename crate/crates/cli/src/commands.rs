
use polyfun_core::arith::factorize;
use polyfun_core::multivar::{canonicalize_multi, psi_d_general};
use polyfun_core::polyfun::{
    basic_null_polys, canonicalize, decompose_null, group_structure, psi, invariant_factors,
};
use polyfun_core::smarandache::{basis_spec, smarandache};
use polyfun_core::{FactoredCount, MultiPoly, Poly};

use crate::output::{OutputRecord, Payload, Report};
use crate::{check_modulus, CliError, Result};

/// Cap on `n * (deg + 1)` for commands that evaluate a polynomial on all of `Z_n`.
const EVAL_BUDGET: u64 = 50_000_000;
/// Cap on the index box `s(p^a)^d` scanned by `psi --d`.
const BOX_BUDGET: u64 = 10_000_000;

fn tuple(xs: &[u64]) -> String {
    let parts: Vec<String> = xs.iter().map(u64::to_string).collect();
    format!("({})", parts.join(", "))
}

/// `Z_a^k` notation for runs of equal cyclic orders.
fn cyclic_sum(orders: impl IntoIterator<Item = (u64, u64)>) -> String {
    let parts: Vec<String> = orders
        .into_iter()
        .map(|(q, k)| if k == 1 { format!("Z_{q}") } else { format!("Z_{q}^{k}") })
        .collect();
    if parts.is_empty() { "0".into() } else { parts.join(" + ") }
}

fn runs(orders: &[u64]) -> Vec<(u64, u64)> {
    let mut out: Vec<(u64, u64)> = Vec::new();
    for &q in orders {
        match out.last_mut() {
            Some((last, k)) if *last == q => *k += 1,
            _ => out.push((q, 1)),
        }
    }
    out
}

fn parse_poly(n: u64, text: &str) -> Result<Poly> {
    let p = Poly::parse(n, text)?;
    let cost = n.saturating_mul(p.coeffs().len() as u64 + 1);
    if cost > EVAL_BUDGET {
        return Err(CliError::Input(format!(
            "polynomial of length {} over Z_{n} is too large to evaluate",
            p.coeffs().len()
        )));
    }
    Ok(p)
}

pub fn smarandache_cmd(n: u64) -> Result<Report> {
    check_modulus(n, 1)?;
    let s = smarandache(n)?;
    let mut r = Report::default();
    r.line(s.to_string());
    r.records.push(OutputRecord::new(
        "smarandache",
        format!("n={n}"),
        Payload::text(s),
        "least k with n | k!, from Legendre valuations per prime power",
    ));
    Ok(r)
}

pub fn basis_cmd(n: u64) -> Result<Report> {
    check_modulus(n, 2)?;
    let spec = basis_spec(n)?;
    let polys = basic_null_polys(n)?;
    let mut r = Report::default();
    r.line(format!("n = {n}"));
    r.line(format!("s = {}  q = {}  t = {}", spec.beta(1), spec.q, spec.t()));
    r.line(format!("beta = {}", tuple(&spec.betas)));
    r.line(format!("alpha = {}", tuple(&spec.alphas)));
    for (k, b) in polys.iter().enumerate() {
        r.line(format!("b_{} = {b}", k + 1));
    }
    r.records.push(OutputRecord::new(
        "basis",
        format!("n={n}"),
        Payload::map([
            ("s", Payload::text(spec.beta(1))),
            ("q", Payload::text(spec.q)),
            ("t", Payload::text(spec.t())),
            ("beta", Payload::list(&spec.betas)),
            ("alpha", Payload::list(&spec.alphas)),
            ("basis", Payload::list(polys.iter().map(Poly::to_coeff_string))),
        ]),
        "b_k = alpha_k * prod_{i=1}^{beta_k} (x + i), alpha_k = n / gcd(n, beta_k!)",
    ));
    Ok(r)
}

fn count_report(command: &str, input: String, count: &FactoredCount, provenance: &str) -> Result<Report> {
    let decimal = count.to_decimal()?;
    let factored = count.to_string();
    let mut r = Report::default();
    r.line(&decimal);
    r.line(&factored);
    r.records.push(OutputRecord::new(
        command,
        input,
        Payload::map([("decimal", Payload::Text(decimal)), ("factored", Payload::Text(factored))]),
        provenance,
    ));
    Ok(r)
}

pub fn psi_cmd(n: u64, d: Option<usize>) -> Result<Report> {
    check_modulus(n, 1)?;
    match d {
        None | Some(1) => count_report(
            "psi",
            format!("n={n}"),
            &psi(n)?,
            "prod_k gcd(n, beta_k!)^(beta_k - beta_{k-1})",
        ),
        Some(0) => Err(CliError::Input("--d must be at least 1".into())),
        Some(d) => {
            for &(p, a) in factorize(n)?.pairs() {
                let s = smarandache(p.pow(a))?;
                if s.checked_pow(d as u32).is_none_or(|b| b > BOX_BUDGET) {
                    return Err(CliError::Input(format!(
                        "index box {s}^{d} for {p}^{a} exceeds {BOX_BUDGET}"
                    )));
                }
            }
            count_report(
                "psi",
                format!("n={n} d={d}"),
                &psi_d_general(n, d)?,
                "prod over p^m || n of prod_{e_p(k) < m} p^(m - e_p(k))",
            )
        }
    }
}

pub fn decompose_cmd(n: u64, poly: &str) -> Result<Report> {
    check_modulus(n, 2)?;
    let p = parse_poly(n, poly)?;
    let d = decompose_null(&p)?;
    let mut r = Report::default();
    let mut entries = Vec::new();
    for (k, q) in d.cofactors().iter().enumerate() {
        r.line(format!("q_{} mod {} = {}", k + 1, q.modulus(), q.to_coeff_string()));
        entries.push(format!("{}:{}", q.modulus(), q.to_coeff_string()));
    }
    r.records.push(OutputRecord::new(
        "decompose",
        format!("n={n} p={}", p.to_coeff_string()),
        Payload::List(entries),
        "staged monic division by prod_{i=1}^{beta_k} (x + i) over Z_{n/alpha_k}",
    ));
    Ok(r)
}

pub fn canonical_cmd(n: u64, poly: &str) -> Result<Report> {
    check_modulus(n, 1)?;
    let p = parse_poly(n, poly)?;
    let c = canonicalize(&p).to_poly();
    let mut r = Report::default();
    r.line(c.to_coeff_string());
    r.records.push(OutputRecord::new(
        "canonical",
        format!("n={n} p={}", p.to_coeff_string()),
        Payload::text(c.to_coeff_string()),
        "coefficients reduced below n / gcd(n, k!) for k < s(n)",
    ));
    Ok(r)
}

pub fn canonical_multi_cmd(n: u64, path: &str, text: &str) -> Result<Report> {
    check_modulus(n, 2)?;
    let p = MultiPoly::parse(text)?;
    if p.modulus() != n {
        return Err(CliError::Input(format!(
            "{path} declares mod={} but the command line says {n}",
            p.modulus()
        )));
    }
    let c = canonicalize_multi(&p)?;
    let mut r = Report::default();
    r.text.push_str(&c.to_text());
    r.records.push(OutputRecord::new(
        "canonical",
        format!("n={n} file={path}"),
        Payload::list(c.to_text().lines()),
        "coefficients of x^k reduced below p^(m - e_p(k)), k in S_d(p^m)",
    ));
    Ok(r)
}

pub fn group_cmd(n: u64) -> Result<Report> {
    check_modulus(n, 2)?;
    let invariant = invariant_factors(n)?;
    let primary = group_structure(n)?;
    let mut r = Report::default();
    let order = primary.order().to_decimal()?;
    r.line(format!("invariant: {}", cyclic_sum(invariant.iter().copied())));
    r.line(format!("primary: {}", cyclic_sum(runs(&primary.orders()))));
    r.line(format!("order: {order}"));
    let expand = |pairs: &[(u64, u64)]| {
        pairs
            .iter()
            .flat_map(|&(q, k)| std::iter::repeat_n(q, k as usize))
            .collect::<Vec<_>>()
    };
    r.records.push(OutputRecord::new(
        "group",
        format!("n={n}"),
        Payload::map([
            ("invariant", Payload::list(expand(&invariant))),
            ("primary", Payload::list(primary.orders())),
            ("order", Payload::Text(order)),
        ]),
        "(beta_k - beta_{k+1}) copies of Z_{alpha_{k+1}}, split into prime powers",
    ));
    Ok(r)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Column {
    S,
    Psi,
    Q,
    T,
}

impl Column {
    pub fn name(self) -> &'static str {
        match self {
            Column::S => "s",
            Column::Psi => "psi",
            Column::Q => "q",
            Column::T => "t",
        }
    }
}

pub fn parse_columns(text: &str) -> Result<Vec<Column>> {
    let mut out = Vec::new();
    for name in text.split(',').map(str::trim) {
        let col = match name {
            "s" => Column::S,
            "psi" => Column::Psi,
            "q" => Column::Q,
            "t" => Column::T,
            _ => return Err(CliError::Input(format!("unknown column {name:?}; use s, psi, q, t"))),
        };
        if out.contains(&col) {
            return Err(CliError::Input(format!("column {name:?} listed twice")));
        }
        out.push(col);
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableFormat {
    Csv,
    Json,
}

fn table_row(n: u64, columns: &[Column]) -> Result<Vec<String>> {
    let spec = basis_spec(n)?;
    let mut row = vec![n.to_string()];
    for col in columns {
        row.push(match col {
            Column::S => spec.beta(1).to_string(),
            Column::Psi => psi(n)?.to_decimal()?,
            Column::Q => spec.q.to_string(),
            Column::T => spec.t().to_string(),
        });
    }
    Ok(row)
}

pub fn table_cmd(range: (u64, u64), columns: &[Column], format: TableFormat) -> Result<String> {
    let (a, b) = range;
    let rows = (a..=b).map(|n| table_row(n, columns)).collect::<Result<Vec<_>>>()?;
    match format {
        TableFormat::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            let mut header = vec!["n"];
            header.extend(columns.iter().map(|c| c.name()));
            w.write_record(&header)?;
            for row in &rows {
                w.write_record(row)?;
            }
            let bytes = w.into_inner().map_err(|e| CliError::Input(e.to_string()))?;
            String::from_utf8(bytes).map_err(|e| CliError::Input(e.to_string()))
        }
        TableFormat::Json => {
            let records: Vec<OutputRecord> = rows
                .into_iter()
                .map(|row| {
                    let entries = columns.iter().zip(&row[1..]).map(|(c, v)| (c.name(), Payload::text(v)));
                    OutputRecord::new("table", format!("n={}", row[0]), Payload::map(entries), "s, psi, q, t from the basis data")
                })
                .collect();
            let mut s = serde_json::to_string_pretty(&records)?;
            s.push('\n');
            Ok(s)
        }
    }
}
