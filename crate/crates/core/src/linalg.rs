//! Sparse exact row echelon forms over a coefficient field.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::field::Coeff;

pub type SparseRow<F> = BTreeMap<usize, F>;

/// Incrementally built echelon form. Each stored row has its smallest
/// column as pivot, with pivot coefficient 1.
#[derive(Debug, Clone)]
pub struct Echelon<F> {
    ncols: usize,
    rows: BTreeMap<usize, SparseRow<F>>,
}

impl<F: Coeff> Echelon<F> {
    pub fn new(ncols: usize) -> Self {
        Echelon {
            ncols,
            rows: BTreeMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn nullity(&self) -> usize {
        self.ncols - self.rows.len()
    }

    fn reduce(&self, mut row: SparseRow<F>) -> SparseRow<F> {
        row.retain(|_, c| !c.is_zero());
        let mut from = 0;
        loop {
            let next = row.range(from..).map(|(&k, _)| k).find(|k| self.rows.contains_key(k));
            let Some(k) = next else { break };
            let c = row.remove(&k).unwrap();
            // pivot rows only have entries right of their pivot
            for (&col, a) in self.rows[&k].iter().skip(1) {
                let e = row.entry(col).or_insert_with(F::zero);
                *e = e.clone() - a.clone() * &c;
                if e.is_zero() {
                    row.remove(&col);
                }
            }
            from = k + 1;
        }
        row
    }

    /// Add a row; returns whether it increased the rank.
    pub fn insert(&mut self, row: SparseRow<F>) -> Result<bool> {
        let mut row = self.reduce(row);
        let Some((&pivot, lead)) = row.iter().next() else {
            return Ok(false);
        };
        if pivot >= self.ncols {
            return Err(Error::DomainError(format!("column {pivot} out of range")));
        }
        let inv = lead.checked_inv().ok_or(Error::DivisionByZero)?;
        for c in row.values_mut() {
            *c = c.clone() * &inv;
        }
        self.rows.insert(pivot, row);
        Ok(true)
    }

    /// Whether the row lies in the span of the inserted rows.
    pub fn contains(&self, row: SparseRow<F>) -> bool {
        self.reduce(row).is_empty()
    }

    /// A basis of the solution space of `row . v = 0` over all stored rows,
    /// one vector per free column.
    pub fn kernel_basis(&self) -> Vec<Vec<F>> {
        let free: Vec<usize> = (0..self.ncols).filter(|c| !self.rows.contains_key(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![F::zero(); self.ncols];
                v[f] = F::one();
                for (&pivot, row) in self.rows.iter().rev() {
                    let mut acc = F::zero();
                    for (&col, a) in row.iter().skip(1) {
                        if !v[col].is_zero() {
                            acc += &(a.clone() * &v[col]);
                        }
                    }
                    v[pivot] = -acc;
                }
                v
            })
            .collect()
    }
}
