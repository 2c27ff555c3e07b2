//! Bit-packed incidence matrices.
//!
//! `A[i][j] = 1` iff vertex `j` lies in hyperedge `i`. The matrix is packed
//! along its longer dimension: column-major (one bitset of `m` bits per
//! vertex) when `n >= m`, row-major otherwise. Pairwise intersection counts
//! are `popcount(x & y)` over packed words.

use std::borrow::Cow;

use rayon::prelude::*;

use crate::hypergraph::Hypergraph;

const WORD_BITS: usize = u64::BITS as usize;

/// A family of equal-width bitsets stored contiguously.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BitRows {
    len: usize,
    width: usize,
    stride: usize,
    words: Vec<u64>,
}

impl BitRows {
    pub fn new(len: usize, width: usize) -> Self {
        let stride = width.div_ceil(WORD_BITS);
        BitRows {
            len,
            width,
            stride,
            words: vec![0; len * stride],
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn width(&self) -> usize {
        self.width
    }

    /// Words per row.
    pub fn stride(&self) -> usize {
        self.stride
    }

    pub fn row(&self, r: usize) -> &[u64] {
        &self.words[r * self.stride..(r + 1) * self.stride]
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> bool {
        debug_assert!(c < self.width);
        self.words[r * self.stride + c / WORD_BITS] >> (c % WORD_BITS) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize) {
        debug_assert!(c < self.width);
        self.words[r * self.stride + c / WORD_BITS] |= 1 << (c % WORD_BITS);
    }

    pub fn count(&self, r: usize) -> u32 {
        self.row(r).iter().map(|w| w.count_ones()).sum()
    }

    /// `|row(a) & row(b)|`.
    #[inline]
    pub fn intersection_count(&self, a: usize, b: usize) -> u32 {
        self.row(a)
            .iter()
            .zip(self.row(b))
            .map(|(x, y)| (x & y).count_ones())
            .sum()
    }

    /// Whether `row(a) ⊆ row(b)`.
    pub fn is_subset(&self, a: usize, b: usize) -> bool {
        self.row(a)
            .iter()
            .zip(self.row(b))
            .all(|(x, y)| x & !y == 0)
    }

    pub fn ones(&self, r: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(r).iter().enumerate().flat_map(|(k, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let bit = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(k * WORD_BITS + bit)
            })
        })
    }

    pub fn transpose(&self) -> BitRows {
        let mut t = BitRows::new(self.width, self.len);
        for r in 0..self.len {
            for c in self.ones(r) {
                t.set(c, r);
            }
        }
        t
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Orientation {
    /// One packed bitset per hyperedge.
    RowMajor,
    /// One packed bitset per vertex.
    ColumnMajor,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncidenceMatrix {
    rows: usize,
    cols: usize,
    orientation: Orientation,
    packed: BitRows,
}

impl IncidenceMatrix {
    pub fn from_hypergraph(h: &Hypergraph) -> Self {
        Self::from_edges(h.num_vertices(), h.edges().iter().map(Vec::as_slice))
    }

    /// Builds an `edges.len() × num_vertices` matrix from edge vertex lists.
    pub fn from_edges<'a, I>(num_vertices: usize, edges: I) -> Self
    where
        I: IntoIterator<Item = &'a [usize]>,
        I::IntoIter: ExactSizeIterator,
    {
        let edges = edges.into_iter();
        let rows = edges.len();
        let cols = num_vertices;
        let orientation = if cols >= rows {
            Orientation::ColumnMajor
        } else {
            Orientation::RowMajor
        };
        let mut packed = match orientation {
            Orientation::RowMajor => BitRows::new(rows, cols),
            Orientation::ColumnMajor => BitRows::new(cols, rows),
        };
        for (i, edge) in edges.enumerate() {
            for &j in edge {
                match orientation {
                    Orientation::RowMajor => packed.set(i, j),
                    Orientation::ColumnMajor => packed.set(j, i),
                }
            }
        }
        IncidenceMatrix {
            rows,
            cols,
            orientation,
            packed,
        }
    }

    /// Number of hyperedges.
    pub fn rows(&self) -> usize {
        self.rows
    }

    /// Number of vertices.
    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    pub fn packed(&self) -> &BitRows {
        &self.packed
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        match self.orientation {
            Orientation::RowMajor => self.packed.get(i, j),
            Orientation::ColumnMajor => self.packed.get(j, i),
        }
    }

    /// Hyperedges as bitsets over vertices.
    pub fn edge_sets(&self) -> Cow<'_, BitRows> {
        match self.orientation {
            Orientation::RowMajor => Cow::Borrowed(&self.packed),
            Orientation::ColumnMajor => Cow::Owned(self.packed.transpose()),
        }
    }

    /// Vertices as bitsets over hyperedges (the columns of `A`).
    pub fn vertex_sets(&self) -> Cow<'_, BitRows> {
        match self.orientation {
            Orientation::ColumnMajor => Cow::Borrowed(&self.packed),
            Orientation::RowMajor => Cow::Owned(self.packed.transpose()),
        }
    }

    pub fn row_counts(&self) -> Vec<u32> {
        let sets = self.edge_sets();
        (0..self.rows).map(|i| sets.count(i)).collect()
    }

    pub fn col_counts(&self) -> Vec<u32> {
        let sets = self.vertex_sets();
        (0..self.cols).map(|j| sets.count(j)).collect()
    }

    pub fn num_ones(&self) -> usize {
        (0..self.packed.len())
            .map(|r| self.packed.count(r) as usize)
            .sum()
    }

    /// `A·Aᵀ`: entry `(i, j)` is `|e_i ∩ e_j|`.
    pub fn edge_intersections(&self) -> CountMatrix {
        gram(&self.edge_sets())
    }

    /// `Aᵀ·A`: entry `(i, j)` is `|E(v_i) ∩ E(v_j)|`.
    pub fn vertex_intersections(&self) -> CountMatrix {
        gram(&self.vertex_sets())
    }
}

/// Dense square matrix of small counts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountMatrix {
    dim: usize,
    data: Vec<u32>,
}

impl CountMatrix {
    pub fn zeros(dim: usize) -> Self {
        CountMatrix {
            dim,
            data: vec![0; dim * dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.data[i * self.dim + j]
    }

    #[inline]
    pub fn get_mut(&mut self, i: usize, j: usize) -> &mut u32 {
        &mut self.data[i * self.dim + j]
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.dim).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }
}

fn gram(sets: &BitRows) -> CountMatrix {
    let dim = sets.len();
    let mut data = vec![0u32; dim * dim];
    if dim > 0 {
        data.par_chunks_mut(dim).enumerate().for_each(|(i, row)| {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = sets.intersection_count(i, j);
            }
        });
    }
    CountMatrix { dim, data }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances;

    #[test]
    fn counterexample_matrix() {
        let a = instances::counterexample().incidence_matrix();
        assert_eq!((a.rows(), a.cols()), (3, 5));
        assert_eq!(a.orientation(), Orientation::ColumnMajor);
        assert_eq!(a.row_counts(), vec![2, 3, 3]);
        assert_eq!(a.col_counts(), vec![1, 3, 2, 1, 1]);
        assert!(a.get(0, 0) && a.get(0, 1) && !a.get(0, 2));
    }

    #[test]
    fn singletons_give_identity() {
        let a = instances::disjoint_singletons(3).incidence_matrix();
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(a.get(i, j), i == j);
            }
        }
    }

    #[test]
    fn empty_matrix() {
        let a = Hypergraph::empty().incidence_matrix();
        assert_eq!((a.rows(), a.cols()), (0, 0));
        assert_eq!(a.num_ones(), 0);
        assert_eq!(a.edge_intersections().dim(), 0);
    }

    #[test]
    fn row_major_when_more_edges() {
        let h = Hypergraph::new(2, vec![vec![0], vec![1], vec![0, 1]], vec![1; 3], None).unwrap();
        let a = h.incidence_matrix();
        assert_eq!(a.orientation(), Orientation::RowMajor);
        assert_eq!(a.row_counts(), vec![1, 1, 2]);
        assert_eq!(a.col_counts(), vec![2, 2]);
        let ie = a.edge_intersections();
        assert_eq!(ie.get(0, 2), 1);
        assert_eq!(ie.get(0, 1), 0);
    }

    #[test]
    fn bitrows_across_word_boundary() {
        let mut b = BitRows::new(2, 130);
        for c in [0, 63, 64, 129] {
            b.set(0, c);
        }
        b.set(1, 64);
        b.set(1, 129);
        assert_eq!(b.count(0), 4);
        assert_eq!(b.intersection_count(0, 1), 2);
        assert!(b.is_subset(1, 0));
        assert!(!b.is_subset(0, 1));
        assert_eq!(b.ones(0).collect::<Vec<_>>(), vec![0, 63, 64, 129]);
        let t = b.transpose();
        assert_eq!(t.len(), 130);
        assert!(t.get(129, 1) && t.get(63, 0) && !t.get(63, 1));
    }
}
