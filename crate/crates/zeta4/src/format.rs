//! Tables and their CSV / JSON encodings.
//!
//! Exact values are always strings: integers as decimal digits, rationals as
//! `p/q` (also when `q = 1`). The same [`Table`] feeds both encodings, so the
//! two formats carry identical content.

use std::io::{self, Write};

use num_traits::{One, Signed, Zero};
use serde_json::{Map, Value};
use zeta4_core::{Integer, Rational};

use crate::config::Format;

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Index(usize),
    Text(String),
    Empty,
}

impl Cell {
    fn csv(&self) -> String {
        match self {
            Cell::Index(k) => k.to_string(),
            Cell::Text(s) => s.clone(),
            Cell::Empty => String::new(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Index(k) => Value::from(*k),
            Cell::Text(s) => Value::from(s.as_str()),
            Cell::Empty => Value::Null,
        }
    }
}

impl From<String> for Cell {
    fn from(s: String) -> Self {
        Cell::Text(s)
    }
}

impl From<&str> for Cell {
    fn from(s: &str) -> Self {
        Cell::Text(s.to_owned())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    columns: Vec<&'static str>,
    rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(columns: &[&'static str]) -> Self {
        Table {
            columns: columns.to_vec(),
            rows: Vec::new(),
        }
    }

    /// # Panics
    /// If the row length differs from the number of columns.
    pub fn push(&mut self, row: Vec<Cell>) {
        assert_eq!(row.len(), self.columns.len(), "row width");
        self.rows.push(row);
    }

    pub fn columns(&self) -> &[&'static str] {
        &self.columns
    }

    pub fn rows(&self) -> &[Vec<Cell>] {
        &self.rows
    }

    pub fn write(&self, format: Format, out: &mut dyn Write) -> io::Result<()> {
        match format {
            Format::Csv => self.write_csv(out),
            Format::Json => self.write_json(out),
        }
    }

    fn write_csv(&self, out: &mut dyn Write) -> io::Result<()> {
        let mut w = csv::WriterBuilder::new()
            .terminator(csv::Terminator::Any(b'\n'))
            .from_writer(out);
        w.write_record(&self.columns)?;
        for row in &self.rows {
            w.write_record(row.iter().map(Cell::csv))?;
        }
        w.flush()
    }

    fn write_json(&self, out: &mut dyn Write) -> io::Result<()> {
        let objects: Vec<Value> = self
            .rows
            .iter()
            .map(|row| {
                let map: Map<String, Value> = self
                    .columns
                    .iter()
                    .zip(row)
                    .map(|(k, v)| (k.to_string(), v.json()))
                    .collect();
                Value::Object(map)
            })
            .collect();
        serde_json::to_writer_pretty(&mut *out, &objects)?;
        out.write_all(b"\n")
    }
}

/// `p/q` with `q > 0`, even for integers.
pub fn rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Digits of an integral value, `p/q` otherwise.
pub fn integer_or_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        rational(r)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rounding {
    Down,
    Up,
}

impl Rounding {
    fn flip(self) -> Self {
        match self {
            Rounding::Down => Rounding::Up,
            Rounding::Up => Rounding::Down,
        }
    }
}

/// Significant digits in [`decimal`].
pub const SIGNIFICANT_DIGITS: usize = 15;

fn pow10(e: i64) -> Rational {
    let p = num_traits::pow(Integer::from(10), e.unsigned_abs() as usize);
    if e >= 0 {
        Rational::from_integer(p)
    } else {
        Rational::new(Integer::one(), p)
    }
}

/// Scientific notation with 15 significant digits, rounded towards `-∞`
/// ([`Rounding::Down`]) or `+∞` ([`Rounding::Up`]).
pub fn decimal(r: &Rational, dir: Rounding) -> String {
    if r.is_zero() {
        return "0".to_owned();
    }
    if r.is_negative() {
        return format!("-{}", decimal(&-r, dir.flip()));
    }
    let mut e = r.numer().to_string().len() as i64 - r.denom().to_string().len() as i64;
    while pow10(e) > *r {
        e -= 1;
    }
    while pow10(e + 1) <= *r {
        e += 1;
    }
    let sig = SIGNIFICANT_DIGITS as i64;
    let scaled = r / pow10(e - (sig - 1));
    let mut m = match dir {
        Rounding::Down => scaled.floor(),
        Rounding::Up => scaled.ceil(),
    }
    .to_integer();
    if m == *pow10(sig).numer() {
        m = pow10(sig - 1).to_integer();
        e += 1;
    }
    let digits = m.to_string();
    format!("{}.{}e{}", &digits[..1], &digits[1..], e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::parse_rational;
    use proptest::prelude::*;
    use zeta4_core::arith::{rat, rat_int};

    #[test]
    fn rationals_always_carry_a_denominator() {
        assert_eq!(rational(&rat_int(13)), "13/1");
        assert_eq!(rational(&rat(0, 5)), "0/1");
        assert_eq!(rational(&rat(13923, 16)), "13923/16");
        assert_eq!(rational(&rat(3, -6)), "-1/2");
        assert_eq!(integer_or_rational(&rat_int(804)), "804");
        assert_eq!(integer_or_rational(&rat(3, 2)), "3/2");
    }

    #[test]
    fn decimal_examples() {
        let third = rat(1, 3);
        assert_eq!(decimal(&third, Rounding::Down), "3.33333333333333e-1");
        assert_eq!(decimal(&third, Rounding::Up), "3.33333333333334e-1");
        assert_eq!(decimal(&rat_int(1), Rounding::Up), "1.00000000000000e0");
        assert_eq!(decimal(&rat(-1, 3), Rounding::Down), "-3.33333333333334e-1");
        assert_eq!(decimal(&rat_int(0), Rounding::Down), "0");
        assert_eq!(decimal(&rat_int(1000), Rounding::Down), "1.00000000000000e3");
    }

    #[test]
    fn decimal_rounding_carries_into_exponent() {
        // 9.999999999999999...e-1 rounds up to 1e0.
        let x = Rational::one() - rat(1, 10_i64.pow(17));
        assert_eq!(decimal(&x, Rounding::Up), "1.00000000000000e0");
        assert_eq!(decimal(&x, Rounding::Down), "9.99999999999999e-1");
    }

    #[test]
    fn csv_and_json_layout() {
        let mut t = Table::new(&["n", "v", "note"]);
        t.push(vec![Cell::Index(0), "0/1".into(), Cell::Empty]);
        t.push(vec![Cell::Index(1), "13/1".into(), "a,b".into()]);
        let mut csv = Vec::new();
        t.write(Format::Csv, &mut csv).unwrap();
        assert_eq!(String::from_utf8(csv).unwrap(), "n,v,note\n0,0/1,\n1,13/1,\"a,b\"\n");

        let mut json = Vec::new();
        t.write(Format::Json, &mut json).unwrap();
        let parsed: Value = serde_json::from_slice(&json).unwrap();
        assert_eq!(
            parsed,
            serde_json::json!([
                {"n": 0, "v": "0/1", "note": null},
                {"n": 1, "v": "13/1", "note": "a,b"}
            ])
        );
        let text = String::from_utf8(json).unwrap();
        assert!(text.find("\"n\"").unwrap() < text.find("\"v\"").unwrap());
    }

    proptest! {
        #[test]
        fn decimal_brackets_enclose(num in -10i64.pow(12)..10i64.pow(12), den in 1i64..10i64.pow(9)) {
            prop_assume!(num != 0);
            let x = rat(num, den);
            let lo = parse_rational(&decimal(&x, Rounding::Down)).unwrap();
            let hi = parse_rational(&decimal(&x, Rounding::Up)).unwrap();
            prop_assert!(lo <= x && x <= hi);
            // One unit in the 15th digit.
            let ulp = x.abs() * rat(1, 10i64.pow(14));
            prop_assert!(&hi - &lo <= ulp);
        }
    }
}
