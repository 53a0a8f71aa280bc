//! Relations `R ⊆ X × Y` as boolean matrices.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::sets::StateSet;
use crate::stability::StateMap;

/// A relation between `0..rows` and `0..cols`.
///
/// Both the row sets `{y | x R y}` and the column sets `{x | x R y}` are kept,
/// so forward and backward matching are equally cheap.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "PairList", try_from = "PairList")]
pub struct Relation {
    rows: usize,
    cols: usize,
    by_row: Vec<StateSet>,
    by_col: Vec<StateSet>,
}

#[derive(Serialize, Deserialize)]
struct PairList {
    rows: usize,
    cols: usize,
    pairs: Vec<(usize, usize)>,
}

impl From<Relation> for PairList {
    fn from(r: Relation) -> Self {
        PairList {
            rows: r.rows,
            cols: r.cols,
            pairs: r.pairs().collect(),
        }
    }
}

impl TryFrom<PairList> for Relation {
    type Error = Error;

    fn try_from(p: PairList) -> Result<Self> {
        Relation::from_pairs(p.rows, p.cols, p.pairs)
    }
}

impl Relation {
    pub fn empty(rows: usize, cols: usize) -> Self {
        Relation {
            rows,
            cols,
            by_row: vec![StateSet::new(); rows],
            by_col: vec![StateSet::new(); cols],
        }
    }

    pub fn full(rows: usize, cols: usize) -> Self {
        Relation {
            rows,
            cols,
            by_row: vec![StateSet::full(cols); rows],
            by_col: vec![StateSet::full(rows); cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut r = Self::empty(n, n);
        for i in 0..n {
            r.insert(i, i);
        }
        r
    }

    pub fn from_pairs(
        rows: usize,
        cols: usize,
        pairs: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        let mut r = Self::empty(rows, cols);
        for (x, y) in pairs {
            if x >= rows {
                return Err(Error::StateOutOfRange { index: x, count: rows });
            }
            if y >= cols {
                return Err(Error::StateOutOfRange { index: y, count: cols });
            }
            r.insert(x, y);
        }
        Ok(r)
    }

    /// Decodes bit `x * cols + y` of `mask` as the pair `(x, y)`.
    pub fn from_mask(rows: usize, cols: usize, mask: u64) -> Self {
        let mut r = Self::empty(rows, cols);
        for x in 0..rows {
            for y in 0..cols {
                if mask >> (x * cols + y) & 1 == 1 {
                    r.insert(x, y);
                }
            }
        }
        r
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn insert(&mut self, x: usize, y: usize) {
        self.by_row[x].insert(y);
        self.by_col[y].insert(x);
    }

    pub fn remove(&mut self, x: usize, y: usize) {
        self.by_row[x].remove(y);
        self.by_col[y].remove(x);
    }

    pub fn contains(&self, x: usize, y: usize) -> bool {
        x < self.rows && self.by_row[x].contains(y)
    }

    /// `{y | x R y}`
    pub fn image_of(&self, x: usize) -> &StateSet {
        &self.by_row[x]
    }

    /// `{x | x R y}`
    pub fn preimage_of(&self, y: usize) -> &StateSet {
        &self.by_col[y]
    }

    pub fn len(&self) -> usize {
        self.by_row.iter().map(StateSet::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.by_row.iter().all(StateSet::is_empty)
    }

    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.by_row
            .iter()
            .enumerate()
            .flat_map(|(x, ys)| ys.iter().map(move |y| (x, y)))
    }

    pub fn transpose(&self) -> Relation {
        Relation {
            rows: self.cols,
            cols: self.rows,
            by_row: self.by_col.clone(),
            by_col: self.by_row.clone(),
        }
    }

    pub fn is_subset(&self, other: &Relation) -> bool {
        self.rows == other.rows
            && self.cols == other.cols
            && self.by_row.iter().zip(&other.by_row).all(|(a, b)| a.is_subset(b))
    }

    /// Relational composition read left to right: `x (self ; other) z` iff
    /// `x self y` and `y other z` for some `y`.
    pub fn then(&self, other: &Relation) -> Result<Relation> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                rows: other.rows,
                cols: other.cols,
                want_rows: self.cols,
                want_cols: other.cols,
            });
        }
        let mut out = Relation::empty(self.rows, other.cols);
        for x in 0..self.rows {
            let mut reach = StateSet::new();
            for y in self.by_row[x].iter() {
                reach = reach.union(&other.by_row[y]);
            }
            for z in reach.iter() {
                out.insert(x, z);
            }
        }
        Ok(out)
    }

    /// `(f × g)^{-1}(R) = {(x, y) | f(x) R g(y)}`
    pub fn inverse_image(&self, f: &StateMap, g: &StateMap) -> Result<Relation> {
        if f.codomain() != self.rows || g.codomain() != self.cols {
            return Err(Error::DimensionMismatch {
                rows: self.rows,
                cols: self.cols,
                want_rows: f.codomain(),
                want_cols: g.codomain(),
            });
        }
        let mut out = Relation::empty(f.domain(), g.domain());
        for x in 0..f.domain() {
            for y in 0..g.domain() {
                if self.contains(f.apply(x), g.apply(y)) {
                    out.insert(x, y);
                }
            }
        }
        Ok(out)
    }

    /// `∐_{f×g}(R) = {(f(x), g(y)) | x R y}`
    pub fn direct_image(&self, f: &StateMap, g: &StateMap) -> Result<Relation> {
        if f.domain() != self.rows || g.domain() != self.cols {
            return Err(Error::DimensionMismatch {
                rows: self.rows,
                cols: self.cols,
                want_rows: f.domain(),
                want_cols: g.domain(),
            });
        }
        Relation::from_pairs(
            f.codomain(),
            g.codomain(),
            self.pairs().map(|(x, y)| (f.apply(x), g.apply(y))),
        )
    }

    pub fn is_reflexive(&self) -> bool {
        self.rows == self.cols && (0..self.rows).all(|i| self.contains(i, i))
    }

    /// `R ; R ⊆ R`
    pub fn is_transitive(&self) -> bool {
        self.rows == self.cols
            && self
                .then(self)
                .map(|rr| rr.is_subset(self))
                .unwrap_or(false)
    }

    pub(crate) fn check_dims(&self, rows: usize, cols: usize) -> Result<()> {
        if self.rows == rows && self.cols == cols {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                rows: self.rows,
                cols: self.cols,
                want_rows: rows,
                want_cols: cols,
            })
        }
    }
}

impl fmt::Debug for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Relation({}x{}, ", self.rows, self.cols)?;
        f.debug_set().entries(self.pairs()).finish()?;
        write!(f, ")")
    }
}

impl fmt::Display for Relation {
    /// One row per left state, `1` where related.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for x in 0..self.rows {
            for y in 0..self.cols {
                write!(f, "{}", if self.contains(x, y) { '1' } else { '.' })?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
