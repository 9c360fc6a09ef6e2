use super::field::Field;

/// An incrementally grown subspace of `F^d`, kept in reduced row echelon
/// form so membership tests and quotient coordinates are cheap.
#[derive(Clone, Debug)]
pub struct Span<F: Field> {
    ambient: usize,
    // (pivot column, row with a 1 at the pivot and 0 at every other pivot)
    rows: Vec<(usize, Vec<F>)>,
    basis: Vec<Vec<F>>,
}

impl<F: Field> Span<F> {
    pub fn new(ambient: usize) -> Self {
        Span { ambient, rows: Vec::new(), basis: Vec::new() }
    }

    pub fn from_vectors(ambient: usize, vs: impl IntoIterator<Item = Vec<F>>) -> Self {
        let mut s = Self::new(ambient);
        for v in vs {
            s.insert(v);
        }
        s
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// The vectors that were accepted, in insertion order.
    pub fn basis(&self) -> &[Vec<F>] {
        &self.basis
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.rows.iter().map(|(p, _)| *p).collect()
    }

    /// Columns that are not pivots; the matching unit vectors span a
    /// complement.
    pub fn free_columns(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient];
        for (p, _) in &self.rows {
            is_pivot[*p] = true;
        }
        (0..self.ambient).filter(|&c| !is_pivot[c]).collect()
    }

    /// `v` minus its projection along the span onto the pivot columns.
    pub fn reduce(&self, v: &[F]) -> Vec<F> {
        assert_eq!(v.len(), self.ambient, "vector length mismatch");
        let mut w = v.to_vec();
        for (p, row) in &self.rows {
            if w[*p].is_zero() {
                continue;
            }
            let f = w[*p].clone();
            for (c, x) in row.iter().enumerate() {
                if !x.is_zero() {
                    w[c] = w[c].minus(&f.times(x));
                }
            }
        }
        w
    }

    pub fn contains(&self, v: &[F]) -> bool {
        self.reduce(v).iter().all(F::is_zero)
    }

    /// Adds `v`; returns whether the dimension grew.
    pub fn insert(&mut self, v: Vec<F>) -> bool {
        let mut w = self.reduce(&v);
        let Some(p) = w.iter().position(|x| !x.is_zero()) else { return false };
        let inv = w[p].inverse().expect("nonzero pivot");
        for x in w.iter_mut() {
            *x = x.times(&inv);
        }
        for (_, row) in self.rows.iter_mut() {
            if row[p].is_zero() {
                continue;
            }
            let f = row[p].clone();
            for (c, x) in w.iter().enumerate() {
                if !x.is_zero() {
                    row[c] = row[c].minus(&f.times(x));
                }
            }
        }
        self.rows.push((p, w));
        self.basis.push(v);
        true
    }
}
