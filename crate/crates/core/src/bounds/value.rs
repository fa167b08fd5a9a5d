use std::cmp::Ordering;
use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

/// `int + coeff * sqrt(radicand)` with a non-negative radicand.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Surd {
    pub int: i64,
    pub coeff: i64,
    pub radicand: i64,
}

impl Surd {
    pub fn approx(&self) -> f64 {
        self.int as f64 + self.coeff as f64 * (self.radicand as f64).sqrt()
    }

    /// Exact order of the integer `v` relative to this surd, by squaring.
    pub fn cmp_int(&self, v: i64) -> Ordering {
        debug_assert!(self.radicand >= 0);
        // compare p = v - int against q = coeff * sqrt(radicand)
        let p = v as i128 - self.int as i128;
        let q_sign = if self.radicand == 0 {
            0
        } else {
            self.coeff.signum() as i128
        };
        let p_sign = p.signum();
        if p_sign != q_sign {
            return p_sign.cmp(&q_sign);
        }
        let p2 = p * p;
        let q2 = (self.coeff as i128).pow(2) * self.radicand as i128;
        match p_sign {
            1 => p2.cmp(&q2),
            -1 => q2.cmp(&p2),
            _ => Ordering::Equal,
        }
    }
}

impl fmt::Display for Surd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.coeff < 0 { '-' } else { '+' };
        let c = self.coeff.abs();
        if c == 1 {
            write!(f, "{}{}sqrt({})", self.int, sign, self.radicand)
        } else {
            write!(f, "{}{}{}*sqrt({})", self.int, sign, c, self.radicand)
        }
    }
}

impl Serialize for Surd {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Surd", 4)?;
        st.serialize_field("int", &self.int)?;
        st.serialize_field("coeff", &self.coeff)?;
        st.serialize_field("radicand", &self.radicand)?;
        st.serialize_field("approx", &self.approx())?;
        st.end()
    }
}

/// A side of a bound: an integer or a quadratic surd.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Value {
    Int(i64),
    Surd(Surd),
}

impl Value {
    /// Exact comparison. Two surds compare only when identical.
    pub fn cmp_exact(&self, other: &Value) -> Option<Ordering> {
        match (self, other) {
            (Value::Int(a), Value::Int(b)) => Some(a.cmp(b)),
            (Value::Int(a), Value::Surd(s)) => Some(s.cmp_int(*a)),
            (Value::Surd(s), Value::Int(b)) => Some(s.cmp_int(*b).reverse()),
            (Value::Surd(a), Value::Surd(b)) => (a == b).then_some(Ordering::Equal),
        }
    }

    pub fn approx(&self) -> f64 {
        match self {
            Value::Int(v) => *v as f64,
            Value::Surd(s) => s.approx(),
        }
    }
}

impl From<usize> for Value {
    fn from(v: usize) -> Self {
        Value::Int(v as i64)
    }
}

impl From<i64> for Value {
    fn from(v: i64) -> Self {
        Value::Int(v)
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Int(v) => write!(f, "{v}"),
            Value::Surd(s) => write!(f, "{s} (~{:.4})", s.approx()),
        }
    }
}
