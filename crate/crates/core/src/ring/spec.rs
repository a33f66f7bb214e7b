//! Ring-spec strings.
//!
//! ```text
//! zmod:<n>                      Z/nZ
//! dual:zmod:<n>                 {(a b; 0 a)} over Z/nZ
//! groupring:zmod:<n>;C2         Z/nZ[C2], C2 = {1, g}
//! quot:zmod:<n>;<monic poly>    Z/nZ[x]/(f), e.g. quot:zmod:3;x^2+x+1
//! table:<path>                  tables read from a text file
//! ```
//!
//! A table file holds whitespace-separated integers: the order, then the
//! `order²` addition table rows, then the `order²` multiplication table
//! rows, then the index of the identity. Lines starting with `#` are
//! ignored.

use std::path::Path;

use super::{Construction, FiniteRing, MAX_ORDER};
use crate::error::{Error, Result};

pub fn ring_from_spec(spec: &str) -> Result<FiniteRing> {
    let spec = spec.trim();
    if let Some(rest) = spec.strip_prefix("zmod:") {
        let n = parse_modulus(spec, rest)?;
        return zmod(n);
    }
    if let Some(rest) = spec.strip_prefix("dual:zmod:") {
        let n = parse_modulus(spec, rest)?;
        return dual(n);
    }
    if let Some(rest) = spec.strip_prefix("groupring:zmod:") {
        let (n, group) = rest
            .split_once(';')
            .ok_or_else(|| Error::parse(spec, "expected `groupring:zmod:<n>;C2`"))?;
        if group.trim() != "C2" {
            return Err(Error::parse(spec, format!("unsupported group `{group}`, only C2 is available")));
        }
        let n = parse_modulus(spec, n)?;
        return group_ring_c2(n);
    }
    if let Some(rest) = spec.strip_prefix("quot:zmod:") {
        let (n, poly) = rest
            .split_once(';')
            .ok_or_else(|| Error::parse(spec, "expected `quot:zmod:<n>;<polynomial>`"))?;
        let n = parse_modulus(spec, n)?;
        let poly = parse_poly(poly, n).map_err(|reason| Error::parse(spec, reason))?;
        return quotient(n, &poly);
    }
    if let Some(path) = spec.strip_prefix("table:") {
        return from_table_file(Path::new(path));
    }
    Err(Error::parse(
        spec,
        "expected one of zmod:<n>, dual:zmod:<n>, groupring:zmod:<n>;C2, quot:zmod:<n>;<poly>, table:<path>",
    ))
}

fn parse_modulus(spec: &str, s: &str) -> Result<u32> {
    let n: u32 = s
        .trim()
        .parse()
        .map_err(|_| Error::parse(spec, format!("`{s}` is not a modulus")))?;
    if n < 2 {
        return Err(Error::parse(spec, "modulus must be at least 2"));
    }
    if n as usize > MAX_ORDER {
        return Err(Error::parse(spec, format!("modulus exceeds {MAX_ORDER}")));
    }
    Ok(n)
}

pub fn zmod(n: u32) -> Result<FiniteRing> {
    let m = n as usize;
    FiniteRing::tabulate(
        format!("zmod:{n}"),
        Construction::ZMod { modulus: n },
        m,
        1,
        |x, y| (x + y) % m,
        |x, y| (x * y) % m,
    )
}

pub fn dual(n: u32) -> Result<FiniteRing> {
    let m = n as usize;
    if m * m > MAX_ORDER {
        return Err(Error::parse(format!("dual:zmod:{n}"), "ring too large"));
    }
    let split = move |x: usize| (x / m, x % m);
    FiniteRing::tabulate(
        format!("dual:zmod:{n}"),
        Construction::Dual { modulus: n },
        m * m,
        m as u32,
        |x, y| {
            let ((a, b), (c, d)) = (split(x), split(y));
            ((a + c) % m) * m + (b + d) % m
        },
        |x, y| {
            let ((a, b), (c, d)) = (split(x), split(y));
            ((a * c) % m) * m + (a * d + b * c) % m
        },
    )
}

pub fn group_ring_c2(n: u32) -> Result<FiniteRing> {
    let m = n as usize;
    if m * m > MAX_ORDER {
        return Err(Error::parse(format!("groupring:zmod:{n};C2"), "ring too large"));
    }
    let split = move |x: usize| (x / m, x % m);
    FiniteRing::tabulate(
        format!("groupring:zmod:{n};C2"),
        Construction::GroupRingC2 { modulus: n },
        m * m,
        m as u32,
        |x, y| {
            let ((a, b), (c, d)) = (split(x), split(y));
            ((a + c) % m) * m + (b + d) % m
        },
        // (a + bg)(c + dg) = (ac + bd) + (ad + bc)g since g² = 1
        |x, y| {
            let ((a, b), (c, d)) = (split(x), split(y));
            ((a * c + b * d) % m) * m + (a * d + b * c) % m
        },
    )
}

/// `Z/nZ[x]/(f)` for a monic `f` given by its coefficients, lowest first.
pub fn quotient(n: u32, poly: &[u32]) -> Result<FiniteRing> {
    let m = n as usize;
    let label = format!("quot:zmod:{n};{}", format_poly_x(poly));
    let deg = poly.len().saturating_sub(1);
    if deg == 0 {
        return Err(Error::parse(label, "modulus polynomial must have degree ≥ 1"));
    }
    if poly[deg] % n != 1 % n {
        return Err(Error::parse(label, "modulus polynomial must be monic"));
    }
    let order = (m as u128).checked_pow(deg as u32).unwrap_or(u128::MAX);
    if order > MAX_ORDER as u128 {
        return Err(Error::parse(label, format!("ring of order {order} exceeds {MAX_ORDER}")));
    }
    let order = order as usize;
    let poly_owned: Vec<u32> = poly.to_vec();
    let mul = |x: usize, y: usize| {
        let a = quotient_coeffs(x, m, deg);
        let b = quotient_coeffs(y, m, deg);
        let mut prod = vec![0usize; 2 * deg - 1];
        for (i, &ai) in a.iter().enumerate() {
            for (j, &bj) in b.iter().enumerate() {
                prod[i + j] = (prod[i + j] + ai * bj) % m;
            }
        }
        for k in (deg..prod.len()).rev() {
            let c = prod[k];
            if c == 0 {
                continue;
            }
            prod[k] = 0;
            for (i, &fi) in poly_owned[..deg].iter().enumerate() {
                let t = (c * fi as usize) % m;
                prod[k - deg + i] = (prod[k - deg + i] + m - t) % m;
            }
        }
        quotient_index(&prod[..deg], m)
    };
    let add = |x: usize, y: usize| {
        let a = quotient_coeffs(x, m, deg);
        let b = quotient_coeffs(y, m, deg);
        let s: Vec<usize> = a.iter().zip(&b).map(|(p, q)| (p + q) % m).collect();
        quotient_index(&s, m)
    };
    let one = quotient_index(&{
        let mut c = vec![0; deg];
        c[0] = 1 % m;
        c
    }, m);
    FiniteRing::tabulate(
        label,
        Construction::Quotient { modulus: n, poly: poly.to_vec() },
        order,
        one as u32,
        add,
        mul,
    )
}

/// Coefficients `(c0, .., c_{deg-1})` of the element with index `x`.
pub(crate) fn quotient_coeffs(mut x: usize, m: usize, deg: usize) -> Vec<usize> {
    let mut c = vec![0; deg];
    for slot in c.iter_mut().rev() {
        *slot = x % m;
        x /= m;
    }
    c
}

fn quotient_index(c: &[usize], m: usize) -> usize {
    c.iter().fold(0, |acc, &ci| acc * m + ci)
}

pub(crate) fn format_poly(coeffs: &[usize]) -> String {
    let mut terms = Vec::new();
    for (k, &c) in coeffs.iter().enumerate() {
        if c == 0 {
            continue;
        }
        terms.push(match (k, c) {
            (0, c) => c.to_string(),
            (1, 1) => "x".to_string(),
            (1, c) => format!("{c}x"),
            (k, 1) => format!("x^{k}"),
            (k, c) => format!("{c}x^{k}"),
        });
    }
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join("+")
    }
}

fn format_poly_x(poly: &[u32]) -> String {
    let mut terms = Vec::new();
    for (k, &c) in poly.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        terms.push(match (k, c) {
            (0, c) => c.to_string(),
            (1, 1) => "x".to_string(),
            (1, c) => format!("{c}x"),
            (k, 1) => format!("x^{k}"),
            (k, c) => format!("{c}x^{k}"),
        });
    }
    terms.join("+")
}

/// Parses a polynomial in `x` such as `x^2+x+1`, `2x^3 - x + 4` or
/// `x^2+2*x`. Coefficients are reduced mod `n`; result is lowest first.
pub fn parse_poly(s: &str, n: u32) -> std::result::Result<Vec<u32>, String> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err("empty polynomial".into());
    }
    let modulus = n as i64;
    let mut coeffs: Vec<i64> = Vec::new();
    let mut rest = compact.as_str();
    while !rest.is_empty() {
        let (sign, body) = match rest.as_bytes()[0] {
            b'+' => (1, &rest[1..]),
            b'-' => (-1, &rest[1..]),
            _ if rest.len() == compact.len() => (1, rest),
            _ => return Err(format!("expected `+` or `-` before `{rest}`")),
        };
        let end = body[1.min(body.len())..]
            .find(['+', '-'])
            .map(|p| p + 1)
            .unwrap_or(body.len());
        let term = &body[..end];
        rest = &body[end..];
        if term.is_empty() {
            return Err("dangling sign".into());
        }
        let (coef, power) = parse_term(term)?;
        if coeffs.len() <= power {
            coeffs.resize(power + 1, 0);
        }
        coeffs[power] = (coeffs[power] + sign * coef).rem_euclid(modulus);
    }
    while coeffs.len() > 1 && *coeffs.last().unwrap() == 0 {
        coeffs.pop();
    }
    Ok(coeffs.into_iter().map(|c| c as u32).collect())
}

fn parse_term(term: &str) -> std::result::Result<(i64, usize), String> {
    let bad = || format!("cannot read term `{term}`");
    match term.find('x') {
        None => Ok((term.parse().map_err(|_| bad())?, 0)),
        Some(pos) => {
            let head = term[..pos].trim_end_matches('*');
            let coef = if head.is_empty() { 1 } else { head.parse().map_err(|_| bad())? };
            let tail = &term[pos + 1..];
            let power = if tail.is_empty() {
                1
            } else {
                tail.strip_prefix('^')
                    .ok_or_else(bad)?
                    .parse()
                    .map_err(|_| bad())?
            };
            if power > 16 {
                return Err(format!("degree {power} is too large"));
            }
            Ok((coef, power))
        }
    }
}

pub fn from_table_file(path: &Path) -> Result<FiniteRing> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io {
        path: path.display().to_string(),
        reason: e.to_string(),
    })?;
    from_table_text(&format!("table:{}", path.display()), &text)
}

/// Parses the table format described in the module docs.
pub fn from_table_text(label: &str, text: &str) -> Result<FiniteRing> {
    let numbers = read_numbers(label, text)?;
    let mut it = numbers.into_iter();
    let order = it.next().ok_or_else(|| Error::parse(label, "missing order"))? as usize;
    if order < 2 || order > MAX_ORDER {
        return Err(Error::parse(label, format!("order {order} outside 2..={MAX_ORDER}")));
    }
    let add: Vec<u32> = it.by_ref().take(order * order).map(|v| v as u32).collect();
    let mul: Vec<u32> = it.by_ref().take(order * order).map(|v| v as u32).collect();
    let one = it.next().ok_or_else(|| Error::parse(label, "table file ends before the identity index"))?;
    if add.len() != order * order || mul.len() != order * order {
        return Err(Error::parse(label, "table file ends early"));
    }
    if it.next().is_some() {
        return Err(Error::parse(label, "trailing data after the identity index"));
    }
    FiniteRing::from_tables(label, Construction::Table, order, add, mul, one as u32)
}

pub(crate) fn read_numbers(label: &str, text: &str) -> Result<Vec<u64>> {
    let mut out = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.starts_with('#') {
            continue;
        }
        for tok in line.split(|c: char| c.is_whitespace() || c == ',') {
            if tok.is_empty() {
                continue;
            }
            let v = tok.parse::<u64>().map_err(|_| {
                Error::parse(label, format!("line {}: `{tok}` is not a non-negative integer", lineno + 1))
            })?;
            out.push(v);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Elem;

    #[test]
    fn zmod4_has_order_four() {
        let r = ring_from_spec("zmod:4").unwrap();
        assert_eq!(r.order(), 4);
        assert_eq!(r.mul(Elem(3), Elem(3)), Elem(1));
        assert_eq!(r.neg(Elem(1)), Elem(3));
    }

    #[test]
    fn dual_ring_multiplication() {
        let r = ring_from_spec("dual:zmod:4").unwrap();
        assert_eq!(r.order(), 16);
        assert_eq!(r.one(), Elem(4));
        // (0,1)·(1,3) = (0, 0·3 + 1·1) = (0,1)
        assert_eq!(r.mul(Elem(1), Elem(7)), Elem(1));
        // (0,1)² = 0
        assert_eq!(r.mul(Elem(1), Elem(1)), Elem(0));
        assert_eq!(r.describe(Elem(7)), "(1,3)");
    }

    #[test]
    fn group_ring_g_squared_is_one() {
        let r = ring_from_spec("groupring:zmod:4;C2").unwrap();
        assert_eq!(r.order(), 16);
        assert_eq!(r.one(), Elem(4));
        let g = Elem(1);
        assert_eq!(r.mul(g, g), r.one());
        assert_eq!(r.describe(Elem(6)), "1+2g");
    }

    #[test]
    fn quotient_ring_x_cubed_is_one() {
        let r = ring_from_spec("quot:zmod:3;x^2+x+1").unwrap();
        assert_eq!(r.order(), 9);
        // c0 is the most significant digit: x has index 1, 1 has index 3
        let x = Elem(1);
        assert_eq!(r.one(), Elem(3));
        let x3 = r.pow(x, 3);
        assert_eq!(x3, r.one());
        assert_eq!(r.describe(Elem(5)), "1+2x");
    }

    #[test]
    fn polynomial_parser() {
        assert_eq!(parse_poly("x^2+x+1", 3).unwrap(), vec![1, 1, 1]);
        assert_eq!(parse_poly("2x^3 - x + 4", 5).unwrap(), vec![4, 4, 0, 2]);
        assert_eq!(parse_poly("x^2 + 2*x", 7).unwrap(), vec![0, 2, 1]);
        assert_eq!(parse_poly("-1+x", 3).unwrap(), vec![2, 1]);
        assert!(parse_poly("x^^2", 3).is_err());
        assert!(parse_poly("", 3).is_err());
    }

    #[test]
    fn rejects_bad_specs() {
        for bad in ["zmod:1", "zmod:x", "ring:4", "groupring:zmod:4;C3", "quot:zmod:3;2x^2+1", "quot:zmod:3;5"] {
            assert!(matches!(ring_from_spec(bad), Err(Error::Parse { .. })), "{bad}");
        }
    }

    #[test]
    fn table_text_round_trip() {
        let text = "# Z/2Z\n2\n0 1\n1 0\n0 0\n0 1\n1\n";
        let r = from_table_text("table:inline", text).unwrap();
        assert_eq!(r.order(), 2);
        assert_eq!(r.one(), Elem(1));
    }

    #[test]
    fn table_with_broken_distributivity_is_rejected() {
        // Z/3 addition with 2·2 = 2: 2·(1+1) = 2 but 2·1 + 2·1 = 1
        let text = "3\n0 1 2\n1 2 0\n2 0 1\n0 0 0\n0 1 2\n0 2 2\n1\n";
        let err = from_table_text("table:bad", text).unwrap_err();
        assert!(matches!(err, Error::RingAxiom { .. }), "{err:?}");
    }

    #[test]
    fn table_missing_identity() {
        let text = "2\n0 1\n1 0\n0 0\n0 1\n";
        assert!(from_table_text("table:short", text).is_err());
    }
}
