//! A small process-term language and its reachable state space.
//!
//! ```text
//! Defs ::= (Name "=" P ";")+
//! P    ::= "0" | Action "." P | P "+" P | Name | "(" P ")"
//! ```
//!
//! An identifier followed by `.` is an action, any other identifier is a
//! process name. `.` binds tighter than `+`. Line comments start with `#`.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::fmt;

use crate::error::{Error, Result};
use crate::lts::Lts;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Term {
    Nil,
    Prefix(String, Box<Term>),
    Sum(Vec<Term>),
    Name(String),
}

impl Term {
    /// Flattens nested sums, drops `0` summands and sorts the rest, so that
    /// sums equal up to associativity, commutativity and idempotence share
    /// one representation.
    fn normalize(self) -> Term {
        match self {
            Term::Prefix(a, p) => Term::Prefix(a, Box::new(p.normalize())),
            Term::Sum(parts) => {
                let mut flat = BTreeSet::new();
                for p in parts {
                    match p.normalize() {
                        Term::Nil => {}
                        Term::Sum(inner) => flat.extend(inner),
                        other => {
                            flat.insert(other);
                        }
                    }
                }
                let mut flat: Vec<Term> = flat.into_iter().collect();
                match flat.len() {
                    0 => Term::Nil,
                    1 => flat.pop().unwrap(),
                    _ => Term::Sum(flat),
                }
            }
            t => t,
        }
    }

    fn collect_actions(&self, out: &mut BTreeSet<String>) {
        match self {
            Term::Prefix(a, p) => {
                out.insert(a.clone());
                p.collect_actions(out);
            }
            Term::Sum(parts) => parts.iter().for_each(|p| p.collect_actions(out)),
            Term::Nil | Term::Name(_) => {}
        }
    }

    fn collect_names<'a>(&'a self, out: &mut Vec<&'a str>) {
        match self {
            Term::Name(n) => out.push(n),
            Term::Prefix(_, p) => p.collect_names(out),
            Term::Sum(parts) => parts.iter().for_each(|p| p.collect_names(out)),
            Term::Nil => {}
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Nil => write!(f, "0"),
            Term::Name(n) => write!(f, "{n}"),
            Term::Prefix(a, p) => match **p {
                Term::Sum(_) => write!(f, "{a}.({p})"),
                _ => write!(f, "{a}.{p}"),
            },
            Term::Sum(parts) => {
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        write!(f, " + ")?;
                    }
                    write!(f, "{p}")?;
                }
                Ok(())
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Ident(String),
    Zero,
    Dot,
    Plus,
    Eq,
    Semi,
    Open,
    Close,
}

#[derive(Clone, Debug)]
struct Spanned {
    tok: Tok,
    line: usize,
    column: usize,
}

fn syntax(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Term {
        line,
        column,
        message: message.into(),
    }
}

fn lex(text: &str) -> Result<Vec<Spanned>> {
    let mut out = Vec::new();
    for (l, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("");
        let chars: Vec<char> = line.chars().collect();
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            let column = i + 1;
            let simple = match c {
                '.' => Some(Tok::Dot),
                '+' => Some(Tok::Plus),
                '=' => Some(Tok::Eq),
                ';' => Some(Tok::Semi),
                '(' => Some(Tok::Open),
                ')' => Some(Tok::Close),
                '0' => Some(Tok::Zero),
                _ => None,
            };
            if let Some(tok) = simple {
                if tok == Tok::Zero && chars.get(i + 1).is_some_and(|d| d.is_ascii_alphanumeric()) {
                    return Err(syntax(l + 1, column, "only the literal `0` is allowed"));
                }
                out.push(Spanned { tok, line: l + 1, column });
                i += 1;
            } else if c.is_whitespace() {
                i += 1;
            } else if c.is_ascii_alphabetic() || c == '_' {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || matches!(chars[i], '_' | '\'')) {
                    i += 1;
                }
                out.push(Spanned {
                    tok: Tok::Ident(chars[start..i].iter().collect()),
                    line: l + 1,
                    column,
                });
            } else {
                return Err(syntax(l + 1, column, format!("unexpected character `{c}`")));
            }
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
    end: (usize, usize),
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|s| &s.tok)
    }

    fn here(&self) -> (usize, usize) {
        self.toks
            .get(self.pos)
            .map(|s| (s.line, s.column))
            .unwrap_or(self.end)
    }

    fn fail<T>(&self, message: impl Into<String>) -> Result<T> {
        let (line, column) = self.here();
        Err(syntax(line, column, message))
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<()> {
        if self.peek() == Some(&tok) {
            self.pos += 1;
            Ok(())
        } else {
            self.fail(format!("expected {what}"))
        }
    }

    fn defs(&mut self) -> Result<Vec<(String, Term)>> {
        let mut defs = Vec::new();
        while self.peek().is_some() {
            let name = match self.peek() {
                Some(Tok::Ident(n)) => n.clone(),
                _ => return self.fail("expected a process name"),
            };
            self.pos += 1;
            self.expect(Tok::Eq, "`=`")?;
            let body = self.sum()?;
            self.expect(Tok::Semi, "`;`")?;
            defs.push((name, body));
        }
        if defs.is_empty() {
            return self.fail("expected at least one definition");
        }
        Ok(defs)
    }

    fn sum(&mut self) -> Result<Term> {
        let mut parts = vec![self.prefix()?];
        while self.peek() == Some(&Tok::Plus) {
            self.pos += 1;
            parts.push(self.prefix()?);
        }
        Ok(if parts.len() == 1 {
            parts.pop().unwrap()
        } else {
            Term::Sum(parts)
        })
    }

    fn prefix(&mut self) -> Result<Term> {
        match self.peek().cloned() {
            Some(Tok::Zero) => {
                self.pos += 1;
                Ok(Term::Nil)
            }
            Some(Tok::Open) => {
                self.pos += 1;
                let t = self.sum()?;
                self.expect(Tok::Close, "`)`")?;
                Ok(t)
            }
            Some(Tok::Ident(id)) => {
                self.pos += 1;
                if self.peek() == Some(&Tok::Dot) {
                    self.pos += 1;
                    Ok(Term::Prefix(id, Box::new(self.prefix()?)))
                } else {
                    Ok(Term::Name(id))
                }
            }
            _ => self.fail("expected `0`, an action prefix, a name or `(`"),
        }
    }
}

/// Parsed definitions, in source order.
#[derive(Clone, Debug)]
pub struct Definitions {
    order: Vec<String>,
    bodies: HashMap<String, Term>,
}

impl Definitions {
    pub fn parse(text: &str) -> Result<Self> {
        let toks = lex(text)?;
        let end = toks
            .last()
            .map(|s| (s.line, s.column + 1))
            .unwrap_or((1, 1));
        let defs = Parser { toks, pos: 0, end }.defs()?;

        let mut order = Vec::new();
        let mut bodies = HashMap::new();
        for (name, body) in defs {
            if bodies.insert(name.clone(), body.normalize()).is_some() {
                return Err(Error::DuplicateDefinition(name));
            }
            order.push(name);
        }
        let out = Definitions { order, bodies };
        for name in &out.order {
            let mut used = Vec::new();
            out.bodies[name].collect_names(&mut used);
            if let Some(missing) = used.into_iter().find(|n| !out.bodies.contains_key(*n)) {
                return Err(Error::UndefinedName(missing.to_string()));
            }
            out.moves(&Term::Name(name.clone()))?;
        }
        Ok(out)
    }

    /// One-step transitions of `t`, unfolding names.
    fn moves(&self, t: &Term) -> Result<BTreeSet<(String, Term)>> {
        let mut out = BTreeSet::new();
        self.moves_into(t, &mut Vec::new(), &mut out)?;
        Ok(out)
    }

    fn moves_into<'a>(
        &'a self,
        t: &'a Term,
        unfolding: &mut Vec<&'a str>,
        out: &mut BTreeSet<(String, Term)>,
    ) -> Result<()> {
        match t {
            Term::Nil => {}
            Term::Prefix(a, p) => {
                out.insert((a.clone(), (**p).clone()));
            }
            Term::Sum(parts) => {
                for p in parts {
                    self.moves_into(p, unfolding, out)?;
                }
            }
            Term::Name(n) => {
                if unfolding.contains(&n.as_str()) {
                    return Err(Error::UnguardedRecursion(n.clone()));
                }
                let body = self.bodies.get(n).ok_or_else(|| Error::UndefinedName(n.clone()))?;
                unfolding.push(n);
                self.moves_into(body, unfolding, out)?;
                unfolding.pop();
            }
        }
        Ok(())
    }

    /// The reachable state space of the first definition. State 0 is the
    /// initial state; states are named by their terms.
    pub fn to_lts(&self) -> Result<Lts> {
        let root = Term::Name(self.order[0].clone());
        let mut index: BTreeMap<Term, usize> = BTreeMap::new();
        let mut states = vec![root.clone()];
        index.insert(root, 0);
        let mut edges = Vec::new();
        let mut queue = VecDeque::from([0usize]);
        while let Some(s) = queue.pop_front() {
            for (action, target) in self.moves(&states[s].clone())? {
                let next = states.len();
                let t = *index.entry(target.clone()).or_insert_with(|| {
                    states.push(target);
                    queue.push_back(next);
                    next
                });
                edges.push((s, action, t));
            }
        }

        let mut actions = BTreeSet::new();
        for body in self.bodies.values() {
            body.collect_actions(&mut actions);
        }
        let names = states.iter().map(Term::to_string).collect();
        let mut lts = Lts::new(states.len(), actions.into_iter().collect())?
            .with_initial(0)?
            .with_names(names)?;
        for (s, a, t) in edges {
            lts.add_labelled(s, &a, t)?;
        }
        Ok(lts)
    }
}

/// Parses term definitions and returns the reachable LTS of the first one.
pub fn parse_term(defs: &str) -> Result<Lts> {
    Definitions::parse(defs)?.to_lts()
}
