//! Group constructor expressions and their text grammar.
//!
//! ```text
//! spec := Sym(n) | Alt(n) | Cyc(n) | Dih(n) | SL2(q)
//!       | Dir(spec, spec) | Pow(spec, k) | KleinCp3(p1, ..., ps)
//! ```

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum GroupSpec {
    Sym(u32),
    Alt(u32),
    Cyc(u32),
    /// Dihedral group of order `2n`.
    Dih(u32),
    /// `SL(2, q)` over the field with `q = 2^p` elements.
    Sl2(u32),
    Dir(Box<GroupSpec>, Box<GroupSpec>),
    Pow(Box<GroupSpec>, u32),
    /// `(C_p^3 x ... ) : C_2^2` over distinct odd primes.
    KleinCp3(Vec<u32>),
}

pub(crate) fn is_prime(n: u32) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

fn factorial(n: u32) -> Option<u128> {
    (1..=n as u128).try_fold(1u128, |acc, k| acc.checked_mul(k))
}

impl GroupSpec {
    /// Checks the well-formedness rules on every node.
    pub fn validate(&self) -> Result<()> {
        match self {
            GroupSpec::Sym(n) | GroupSpec::Alt(n) => {
                if *n == 0 || *n > 12 {
                    return Err(Error::Malformed(format!(
                        "{self}: degree must be in 1..=12"
                    )));
                }
            }
            GroupSpec::Cyc(n) | GroupSpec::Dih(n) => {
                if *n == 0 {
                    return Err(Error::Malformed(format!("{self}: n must be positive")));
                }
            }
            GroupSpec::Sl2(q) => {
                if !q.is_power_of_two() || *q < 2 || *q > 32 {
                    return Err(Error::Malformed(format!(
                        "{self}: field size must be 2^p with 1 <= p <= 5"
                    )));
                }
            }
            GroupSpec::Dir(a, b) => {
                a.validate()?;
                b.validate()?;
            }
            GroupSpec::Pow(a, k) => {
                if *k == 0 {
                    return Err(Error::Malformed(format!("{self}: exponent must be positive")));
                }
                a.validate()?;
            }
            GroupSpec::KleinCp3(primes) => {
                if primes.is_empty() {
                    return Err(Error::Malformed("KleinCp3 needs at least one prime".into()));
                }
                for (i, &p) in primes.iter().enumerate() {
                    if p == 2 || !is_prime(p) {
                        return Err(Error::Malformed(format!("KleinCp3: {p} is not an odd prime")));
                    }
                    if primes[..i].contains(&p) {
                        return Err(Error::Malformed(format!("KleinCp3: prime {p} repeated")));
                    }
                }
            }
        }
        Ok(())
    }

    /// Group order predicted from the expression, `None` on overflow.
    pub fn order(&self) -> Option<u128> {
        match self {
            GroupSpec::Sym(n) => factorial(*n),
            GroupSpec::Alt(n) => factorial(*n).map(|f| if *n >= 2 { f / 2 } else { f }),
            GroupSpec::Cyc(n) => Some(*n as u128),
            GroupSpec::Dih(n) => Some(2 * *n as u128),
            GroupSpec::Sl2(q) => {
                let q = *q as u128;
                Some(q * (q * q - 1))
            }
            GroupSpec::Dir(a, b) => a.order()?.checked_mul(b.order()?),
            GroupSpec::Pow(a, k) => a.order()?.checked_pow(*k),
            GroupSpec::KleinCp3(primes) => primes
                .iter()
                .try_fold(4u128, |acc, &p| acc.checked_mul((p as u128).pow(3))),
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Sym(n) => write!(f, "Sym({n})"),
            GroupSpec::Alt(n) => write!(f, "Alt({n})"),
            GroupSpec::Cyc(n) => write!(f, "Cyc({n})"),
            GroupSpec::Dih(n) => write!(f, "Dih({n})"),
            GroupSpec::Sl2(q) => write!(f, "SL2({q})"),
            GroupSpec::Dir(a, b) => write!(f, "Dir({a},{b})"),
            GroupSpec::Pow(a, k) => write!(f, "Pow({a},{k})"),
            GroupSpec::KleinCp3(primes) => {
                write!(f, "KleinCp3(")?;
                for (i, p) in primes.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{p}")?;
                }
                write!(f, ")")
            }
        }
    }
}

struct Parser<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.text[self.pos..].starts_with(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        self.skip_ws();
        if self.text[self.pos..].starts_with(c) {
            self.pos += c.len_utf8();
            Ok(())
        } else {
            self.err(format!("expected `{c}`"))
        }
    }

    fn ident(&mut self) -> Result<&'a str> {
        self.skip_ws();
        let rest = &self.text[self.pos..];
        let len = rest
            .find(|c: char| !c.is_ascii_alphanumeric())
            .unwrap_or(rest.len());
        if len == 0 {
            return self.err("expected a constructor name");
        }
        self.pos += len;
        Ok(&rest[..len])
    }

    fn number(&mut self) -> Result<u32> {
        self.skip_ws();
        let rest = &self.text[self.pos..];
        let len = rest.find(|c: char| !c.is_ascii_digit()).unwrap_or(rest.len());
        if len == 0 {
            return self.err("expected an integer");
        }
        let value = rest[..len].parse().or_else(|_| self.err("integer out of range"))?;
        self.pos += len;
        Ok(value)
    }

    fn spec(&mut self) -> Result<GroupSpec> {
        let start = self.pos;
        let name = self.ident()?;
        self.expect('(')?;
        let spec = match name {
            "Sym" => GroupSpec::Sym(self.number()?),
            "Alt" => GroupSpec::Alt(self.number()?),
            "Cyc" => GroupSpec::Cyc(self.number()?),
            "Dih" => GroupSpec::Dih(self.number()?),
            "SL2" => GroupSpec::Sl2(self.number()?),
            "Dir" => {
                let a = self.spec()?;
                self.expect(',')?;
                let b = self.spec()?;
                GroupSpec::Dir(Box::new(a), Box::new(b))
            }
            "Pow" => {
                let a = self.spec()?;
                self.expect(',')?;
                GroupSpec::Pow(Box::new(a), self.number()?)
            }
            "KleinCp3" => {
                let mut primes = vec![self.number()?];
                loop {
                    self.skip_ws();
                    if self.text[self.pos..].starts_with(',') {
                        self.pos += 1;
                        primes.push(self.number()?);
                    } else {
                        break;
                    }
                }
                GroupSpec::KleinCp3(primes)
            }
            other => {
                self.pos = start;
                return self.err(format!("unknown constructor `{other}`"));
            }
        };
        self.expect(')')?;
        Ok(spec)
    }
}

impl FromStr for GroupSpec {
    type Err = Error;

    fn from_str(text: &str) -> Result<GroupSpec> {
        let mut parser = Parser { text, pos: 0 };
        let spec = parser.spec()?;
        parser.skip_ws();
        if parser.pos != text.len() {
            return parser.err("trailing input");
        }
        spec.validate()?;
        Ok(spec)
    }
}

impl Serialize for GroupSpec {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for GroupSpec {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}
