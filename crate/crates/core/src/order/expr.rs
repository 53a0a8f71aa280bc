//! Order expressions:
//!
//! ```text
//! E ::= inclusion | reverse | equality | conformance | conf_empty | conf_nonempty
//!     | cc | cc(<partition file>) | op(E) | compose(E, E) | lbar(E) | rbar(E)
//! ```
//!
//! A bare `cc` takes its partition from the caller. `lbar` / `rbar` select
//! the left-stable / right-stable factor of a built-in order.

use crate::error::{Error, Result};
use crate::lts::ActionPartition;
use crate::order::FunctorialOrder;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OrderExpr {
    Inclusion,
    Reverse,
    Equality,
    Conformance,
    ConfEmpty,
    ConfNonEmpty,
    CovContra(Option<String>),
    Op(Box<OrderExpr>),
    Compose(Box<OrderExpr>, Box<OrderExpr>),
    LeftFactor(Box<OrderExpr>),
    RightFactor(Box<OrderExpr>),
}

struct Cursor<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while self.text[self.pos..].starts_with(char::is_whitespace) {
            self.pos += self.text[self.pos..].chars().next().map_or(1, char::len_utf8);
        }
    }

    fn fail<T>(&self, msg: &str) -> Result<T> {
        Err(Error::InvalidOrder(format!(
            "{msg} at offset {} in `{}`",
            self.pos, self.text
        )))
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.text[self.pos..].starts_with(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            self.fail(&format!("expected `{c}`"))
        }
    }

    fn word(&mut self) -> &'a str {
        self.skip_ws();
        let start = self.pos;
        let rest = &self.text[start..];
        let len = rest
            .find(|c: char| !(c.is_ascii_alphanumeric() || c == '_'))
            .unwrap_or(rest.len());
        self.pos += len;
        &self.text[start..start + len]
    }

    fn expr(&mut self) -> Result<OrderExpr> {
        let word = self.word();
        let unary = |c: &mut Self, wrap: fn(Box<OrderExpr>) -> OrderExpr| -> Result<OrderExpr> {
            c.expect('(')?;
            let inner = c.expr()?;
            c.expect(')')?;
            Ok(wrap(Box::new(inner)))
        };
        match word {
            "inclusion" => Ok(OrderExpr::Inclusion),
            "reverse" => Ok(OrderExpr::Reverse),
            "equality" => Ok(OrderExpr::Equality),
            "conformance" => Ok(OrderExpr::Conformance),
            "conf_empty" => Ok(OrderExpr::ConfEmpty),
            "conf_nonempty" => Ok(OrderExpr::ConfNonEmpty),
            "cc" => {
                if self.eat('(') {
                    let rest = &self.text[self.pos..];
                    let end = rest.find(')').map_or_else(|| self.fail("unclosed `cc(`"), Ok)?;
                    let path = rest[..end].trim().to_string();
                    self.pos += end + 1;
                    if path.is_empty() {
                        return self.fail("empty partition path");
                    }
                    Ok(OrderExpr::CovContra(Some(path)))
                } else {
                    Ok(OrderExpr::CovContra(None))
                }
            }
            "op" => unary(self, OrderExpr::Op),
            "lbar" => unary(self, OrderExpr::LeftFactor),
            "rbar" => unary(self, OrderExpr::RightFactor),
            "compose" => {
                self.expect('(')?;
                let a = self.expr()?;
                self.expect(',')?;
                let b = self.expr()?;
                self.expect(')')?;
                Ok(OrderExpr::Compose(Box::new(a), Box::new(b)))
            }
            "" => self.fail("expected an order"),
            other => self.fail(&format!("unknown order `{other}`")),
        }
    }
}

impl OrderExpr {
    pub fn parse(text: &str) -> Result<Self> {
        let mut c = Cursor { text, pos: 0 };
        let e = c.expr()?;
        c.skip_ws();
        if c.pos != text.len() {
            return c.fail("trailing input");
        }
        Ok(e)
    }

    /// Builds the order over `alphabet`. `partition` resolves `cc` operands:
    /// it receives the file argument, or `None` for a bare `cc`.
    pub fn build(
        &self,
        alphabet: &[String],
        partition: &mut dyn FnMut(Option<&str>) -> Result<ActionPartition>,
    ) -> Result<FunctorialOrder> {
        Ok(match self {
            OrderExpr::Inclusion => FunctorialOrder::inclusion(),
            OrderExpr::Reverse => FunctorialOrder::reverse(),
            OrderExpr::Equality => FunctorialOrder::equality(),
            OrderExpr::Conformance => FunctorialOrder::conformance(),
            OrderExpr::ConfEmpty => FunctorialOrder::conf_empty(),
            OrderExpr::ConfNonEmpty => FunctorialOrder::conf_nonempty(),
            OrderExpr::CovContra(path) => {
                let p = partition(path.as_deref())?;
                FunctorialOrder::cov_contra(p.validate(alphabet)?)
            }
            OrderExpr::Op(inner) => FunctorialOrder::opposite(inner.build(alphabet, partition)?),
            OrderExpr::Compose(a, b) => FunctorialOrder::compose(
                a.build(alphabet, partition)?,
                b.build(alphabet, partition)?,
            )?,
            OrderExpr::LeftFactor(inner) | OrderExpr::RightFactor(inner) => {
                let o = inner.build(alphabet, partition)?;
                let f = o.side_factors().ok_or_else(|| {
                    Error::InvalidOrder(format!("`{o}` has no built-in factorization"))
                })?;
                if matches!(self, OrderExpr::LeftFactor(_)) {
                    f.left
                } else {
                    f.right
                }
            }
        })
    }
}

/// Parses and builds an order expression, reading `cc(<file>)` partitions
/// from disk and using `default_partition` for a bare `cc`.
pub fn make_order(
    text: &str,
    alphabet: &[String],
    default_partition: Option<&ActionPartition>,
) -> Result<FunctorialOrder> {
    OrderExpr::parse(text)?.build(alphabet, &mut |path| match path {
        Some(path) => {
            let doc = std::fs::read_to_string(path)
                .map_err(|e| Error::InvalidPartition(format!("{path}: {e}")))?;
            ActionPartition::from_json(&doc)
        }
        None => default_partition.cloned().ok_or_else(|| {
            Error::InvalidPartition("`cc` needs a partition".to_string())
        }),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lts::{default_alphabet, Side};
    use crate::order::OrderKind;

    #[test]
    fn parses_nested() {
        let e = OrderExpr::parse(" compose( conf_empty , op(reverse) )").unwrap();
        assert_eq!(
            e,
            OrderExpr::Compose(
                Box::new(OrderExpr::ConfEmpty),
                Box::new(OrderExpr::Op(Box::new(OrderExpr::Reverse)))
            )
        );
        assert_eq!(
            OrderExpr::parse("cc(dir/part.json)").unwrap(),
            OrderExpr::CovContra(Some("dir/part.json".into()))
        );
        for bad in ["", "inclusionx", "op(inclusion", "compose(inclusion)", "cc()", "foo", "inclusion reverse"] {
            assert!(OrderExpr::parse(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn builds_with_partition() {
        let ab = default_alphabet(2);
        let p = ActionPartition::from_sides(&ab, &[Side::Right, Side::Left]);
        let o = make_order("op(cc)", &ab, Some(&p)).unwrap();
        assert_eq!(o.name(), "op(cc[rl])");
        assert!(make_order("cc", &ab, None).is_err());
        assert!(make_order("cc(/nonexistent/part.json)", &ab, None).is_err());
        let bad = ActionPartition::from_sides(&ab, &[Side::Right]);
        assert!(matches!(make_order("cc", &ab, Some(&bad)), Err(Error::InvalidPartition(_))));
        let r = make_order("rbar(cc)", &ab, Some(&p)).unwrap();
        assert_eq!(
            r.kind(),
            &OrderKind::PerActionProduct(vec![OrderKind::Inclusion, OrderKind::Equality])
        );
        assert!(make_order("lbar(conf_empty)", &ab, None).is_err());
    }
}
