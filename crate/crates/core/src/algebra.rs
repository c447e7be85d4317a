//! Finite-dimensional commutative non-unital algebras and the graph algebra
//! functor.
//!
//! For a graph `G` the algebra `Q(G)` has degree-1 basis `δ_x` (one per
//! vertex) and degree-2 basis the `Σ_2`-orbits of the relation: one class per
//! vertex (the diagonal pair) followed by one class per edge, edges in
//! lexicographic endpoint order. `δ_x δ_y` is the orbit class of `(x, y)`
//! when `x` and `y` are related, zero otherwise; every other product is zero.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::error::AlgebraError;
use crate::field::Field;
use crate::graphs::{is_cover, Graph, GraphMorphism};
use crate::linalg::{Matrix, SparseVec};

/// Default cap on `|k|^{dim A^1}` for projective enumeration. The
/// dependence table is quadratic in this number.
pub const DEFAULT_PROJ_CAP: u128 = 1 << 12;

/// A commutative algebra given by a basis and its structure constants.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Algebra<F> {
    basis: Vec<String>,
    table: Vec<Vec<SparseVec<F>>>,
}

impl<F: Field> Algebra<F> {
    /// `table[i][j]` is the product of basis elements `i` and `j`.
    pub fn new(basis: Vec<String>, table: Vec<Vec<SparseVec<F>>>) -> Result<Self, AlgebraError> {
        let d = basis.len();
        if table.len() != d || table.iter().any(|row| row.len() != d) {
            return Err(AlgebraError::TableShape(table.len(), table.first().map_or(0, Vec::len)));
        }
        for row in &table {
            for v in row {
                if let Some(k) = v.max_index() {
                    if k >= d {
                        return Err(AlgebraError::BasisIndex(k));
                    }
                }
            }
        }
        Ok(Algebra { basis, table })
    }

    /// The zero algebra on `d` basis vectors.
    pub fn zero_product(d: usize) -> Self {
        Algebra {
            basis: (0..d).map(|i| format!("e{i}")).collect(),
            table: vec![vec![SparseVec::zero(); d]; d],
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[String] {
        &self.basis
    }

    pub fn product(&self, i: usize, j: usize) -> &SparseVec<F> {
        &self.table[i][j]
    }

    /// Bilinear product of two vectors.
    pub fn mul(&self, a: &SparseVec<F>, b: &SparseVec<F>) -> SparseVec<F> {
        let mut pairs = Vec::new();
        for (i, x) in a.entries() {
            for (j, y) in b.entries() {
                let c = x.clone() * y.clone();
                pairs.extend(
                    self.table[*i][*j]
                        .entries()
                        .iter()
                        .map(|(k, v)| (*k, v.clone() * c.clone())),
                );
            }
        }
        SparseVec::from_pairs(pairs)
    }

    /// First pair `(i, j)` with `e_i e_j != e_j e_i`.
    pub fn commutativity_witness(&self) -> Option<(usize, usize)> {
        let d = self.dim();
        (0..d)
            .flat_map(|i| (i + 1..d).map(move |j| (i, j)))
            .find(|&(i, j)| self.table[i][j] != self.table[j][i])
    }

    /// First triple with `(e_i e_j) e_k != e_i (e_j e_k)`.
    pub fn associativity_witness(&self) -> Option<(usize, usize, usize)> {
        let d = self.dim();
        for i in 0..d {
            for j in 0..d {
                let left_ij = &self.table[i][j];
                for k in 0..d {
                    let lhs = self.mul(left_ij, &SparseVec::unit(k));
                    let rhs = self.mul(&SparseVec::unit(i), &self.table[j][k]);
                    if lhs != rhs {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }

    /// The iterated product of the listed basis elements (a multiset).
    pub fn mult_multiset(&self, factors: &[usize]) -> Result<SparseVec<F>, AlgebraError> {
        let (&first, rest) = factors.split_first().ok_or(AlgebraError::EmptyProduct)?;
        if let Some(&bad) = factors.iter().find(|&&k| k >= self.dim()) {
            return Err(AlgebraError::BasisIndex(bad));
        }
        let mut acc = SparseVec::unit(first);
        for &k in rest {
            if acc.is_zero() {
                break;
            }
            acc = self.mul(&acc, &SparseVec::unit(k));
        }
        Ok(acc)
    }

    /// The map `b ↦ (b e_0, …, b e_{d-1})`, as a `d² × d` matrix.
    fn multiplication_operator(&self) -> Matrix<F> {
        let d = self.dim();
        let cols = (0..d)
            .map(|i| {
                SparseVec::from_pairs((0..d).flat_map(|j| {
                    self.table[i][j]
                        .entries()
                        .iter()
                        .map(move |(k, v)| (j * d + k, v.clone()))
                }))
            })
            .collect();
        Matrix::from_columns(d * d, cols).expect("indices below d*d")
    }

    /// `{field, basis, structure_constants}`; each constant is a triple
    /// `[i, j, [[k, coeff], …]]` for a nonzero product `e_i e_j`.
    pub fn to_json(&self) -> Value {
        let mut consts = Vec::new();
        for (i, row) in self.table.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                if !v.is_zero() {
                    let vec: Vec<Value> = v
                        .entries()
                        .iter()
                        .map(|(k, c)| json!([k, c.to_string()]))
                        .collect();
                    consts.push(json!([i, j, vec]));
                }
            }
        }
        json!({
            "field": F::spec().to_string(),
            "basis": self.basis,
            "structure_constants": consts,
        })
    }
}

/// An algebra concentrated in degrees 1 and 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedAlgebra<F> {
    degree1: Vec<String>,
    degree2: Vec<String>,
    product: Vec<Vec<SparseVec<F>>>,
}

impl<F: Field> GradedAlgebra<F> {
    pub fn new(
        degree1: Vec<String>,
        degree2: Vec<String>,
        product: Vec<Vec<SparseVec<F>>>,
    ) -> Result<Self, AlgebraError> {
        let d1 = degree1.len();
        if product.len() != d1 || product.iter().any(|r| r.len() != d1) {
            return Err(AlgebraError::TableShape(product.len(), product.first().map_or(0, Vec::len)));
        }
        if let Some(k) = product.iter().flatten().filter_map(SparseVec::max_index).find(|&k| k >= degree2.len()) {
            return Err(AlgebraError::BasisIndex(k));
        }
        Ok(GradedAlgebra {
            degree1,
            degree2,
            product,
        })
    }

    pub fn degree1(&self) -> &[String] {
        &self.degree1
    }

    pub fn degree2(&self) -> &[String] {
        &self.degree2
    }

    pub fn dim1(&self) -> usize {
        self.degree1.len()
    }

    pub fn dim2(&self) -> usize {
        self.degree2.len()
    }

    /// Product of degree-1 basis elements, in degree-2 coordinates.
    pub fn product(&self, i: usize, j: usize) -> &SparseVec<F> {
        &self.product[i][j]
    }

    /// Forget the grading: basis is degree 1 followed by degree 2.
    pub fn to_ungraded(&self) -> Algebra<F> {
        let (d1, d2) = (self.dim1(), self.dim2());
        let d = d1 + d2;
        let mut table = vec![vec![SparseVec::zero(); d]; d];
        for i in 0..d1 {
            for j in 0..d1 {
                table[i][j] = SparseVec::from_pairs(
                    self.product[i][j].entries().iter().map(|(k, v)| (d1 + k, v.clone())),
                );
            }
        }
        let basis = self.degree1.iter().chain(&self.degree2).cloned().collect();
        Algebra { basis, table }
    }
}

/// Degree-2 orbit indices of a graph's relation.
struct OrbitIndex {
    vertices: usize,
    edges: HashMap<(usize, usize), usize>,
}

impl OrbitIndex {
    fn new(g: &Graph) -> Self {
        let edges = g
            .edges()
            .into_iter()
            .enumerate()
            .map(|(k, e)| (e, k))
            .collect();
        OrbitIndex {
            vertices: g.num_vertices(),
            edges,
        }
    }

    fn len(&self) -> usize {
        self.vertices + self.edges.len()
    }

    /// Orbit class of the related pair `(x, y)`.
    fn of(&self, x: usize, y: usize) -> usize {
        if x == y {
            x
        } else {
            self.vertices + self.edges[&(x.min(y), x.max(y))]
        }
    }
}

/// `Q•(G)`.
pub fn q_graded<F: Field>(g: &Graph) -> GradedAlgebra<F> {
    let orbits = OrbitIndex::new(g);
    let v = g.num_vertices();
    let degree1 = g.labels().to_vec();
    let mut degree2: Vec<String> = g.labels().iter().map(|x| format!("{x}*{x}")).collect();
    degree2.extend(
        g.edges()
            .into_iter()
            .map(|(x, y)| format!("{}*{}", g.label(x), g.label(y))),
    );
    let product = (0..v)
        .map(|x| {
            (0..v)
                .map(|y| {
                    if g.related(x, y) {
                        SparseVec::unit(orbits.of(x, y))
                    } else {
                        SparseVec::zero()
                    }
                })
                .collect()
        })
        .collect();
    GradedAlgebra {
        degree1,
        degree2,
        product,
    }
}

/// `Q(G)`: the graded algebra with the grading forgotten.
pub fn q_ungraded<F: Field>(g: &Graph) -> Algebra<F> {
    q_graded(g).to_ungraded()
}

/// Matrix of `Q(f): Q(H) → Q(G)` for `f: G → H`, in the ungraded bases.
///
/// Degree 1 is pullback along the vertex map. Degree 2 is the map induced
/// on coinvariants by pullback along the pair map: the class of `(y, y')`
/// goes to the sum of the classes of all related pairs `(x, x')` with
/// `(f x, f x') = (y, y')`, so a collapsed edge contributes twice to a
/// diagonal class.
pub fn q_hom_matrix<F: Field>(f: &GraphMorphism) -> Matrix<F> {
    let g = f.source();
    let h = f.target();
    let (og, oh) = (OrbitIndex::new(g), OrbitIndex::new(h));
    let (gv, hv) = (g.num_vertices(), h.num_vertices());
    let mut triplets = Vec::new();
    for x in 0..gv {
        triplets.push((x, f.apply(x), F::one()));
    }
    for (x, y) in g.relation_pairs() {
        let (a, b) = (f.apply(x), f.apply(y));
        // Count each ordered pair that lands on the chosen representative of
        // its target orbit: (a, a) for diagonals, (min, max) for edges.
        if a <= b {
            triplets.push((gv + og.of(x, y), hv + oh.of(a, b), F::one()));
        }
    }
    // The loop above sees each edge {x, y} of G twice, as (x, y) and (y, x).
    // For a non-collapsed edge exactly one orientation has a <= b; for a
    // collapsed one both do, giving the coefficient 2.
    Matrix::from_triplets(gv + og.len(), hv + oh.len(), triplets).expect("indices in range")
}

/// A linear map between algebras, column `j` the image of basis vector `j`.
#[derive(Debug, Clone)]
pub struct AlgebraHom<F> {
    source: Arc<Algebra<F>>,
    target: Arc<Algebra<F>>,
    matrix: Matrix<F>,
}

impl<F: Field> AlgebraHom<F> {
    pub fn new(source: Arc<Algebra<F>>, target: Arc<Algebra<F>>, matrix: Matrix<F>) -> Result<Self, AlgebraError> {
        if matrix.shape() != (target.dim(), source.dim()) {
            return Err(AlgebraError::TableShape(matrix.rows(), matrix.cols()));
        }
        Ok(AlgebraHom {
            source,
            target,
            matrix,
        })
    }

    pub fn source(&self) -> &Arc<Algebra<F>> {
        &self.source
    }

    pub fn target(&self) -> &Arc<Algebra<F>> {
        &self.target
    }

    pub fn matrix(&self) -> &Matrix<F> {
        &self.matrix
    }

    /// First basis pair where `h(e_i e_j) != h(e_i) h(e_j)`.
    pub fn multiplicativity_witness(&self) -> Option<(usize, usize)> {
        let d = self.source.dim();
        (0..d)
            .flat_map(|i| (i..d).map(move |j| (i, j)))
            .find(|&(i, j)| {
                let lhs = self.matrix.apply(self.source.product(i, j));
                let rhs = self
                    .target
                    .mul(self.matrix.column(i), self.matrix.column(j));
                lhs != rhs
            })
    }

    pub fn is_multiplicative(&self) -> bool {
        self.multiplicativity_witness().is_none()
    }
}

/// `Q(f)` as an algebra homomorphism `Q(target) → Q(source)`.
pub fn q_hom<F: Field>(f: &GraphMorphism) -> AlgebraHom<F> {
    AlgebraHom {
        source: Arc::new(q_ungraded(f.target())),
        target: Arc::new(q_ungraded(f.source())),
        matrix: q_hom_matrix(f),
    }
}

/// Whether the family `(Q(f_i))_i: Q(H) → Π Q(G_i)` is injective.
pub fn cover_injectivity<F: Field>(fs: &[GraphMorphism]) -> Result<bool, AlgebraError> {
    if !is_cover(fs)? {
        return Err(AlgebraError::NotACover);
    }
    let blocks: Vec<Matrix<F>> = fs.iter().map(q_hom_matrix).collect();
    let stacked = Matrix::vstack(&blocks)?;
    Ok(stacked.rank() == stacked.cols())
}

/// The grading recovered from an ungraded algebra: `B² = {b : bA = 0}` and
/// `B¹ = A / B²`.
#[derive(Debug, Clone)]
pub struct AnnihilatorGrading<F> {
    /// Basis of `B²` as vectors of `A`. Vector `k` has a one at
    /// `free[k]` and zeros at every other free index.
    pub annihilator: Vec<SparseVec<F>>,
    pub free: Vec<usize>,
    /// Basis indices of `A` whose classes form the basis of `B¹`.
    pub complement: Vec<usize>,
    pub graded: GradedAlgebra<F>,
}

impl<F: Field> AnnihilatorGrading<F> {
    /// Coordinates of `x ∈ B²` in the annihilator basis, or `None` if `x ∉ B²`.
    pub fn annihilator_coords(&self, x: &SparseVec<F>) -> Option<SparseVec<F>> {
        let mut rest = x.clone();
        let mut coords = Vec::new();
        for (k, (b, &f)) in self.annihilator.iter().zip(&self.free).enumerate() {
            let c = x.get(f);
            if !c.is_zero() {
                rest = rest.axpy(&-c.clone(), b);
                coords.push((k, c));
            }
        }
        rest.is_zero().then(|| SparseVec::from_pairs(coords))
    }
}

pub fn annihilator_grading<F: Field>(a: &Algebra<F>) -> Result<AnnihilatorGrading<F>, AlgebraError> {
    let d = a.dim();
    let kernel = a.multiplication_operator().kernel_basis();
    let free: Vec<usize> = kernel.iter().map(|(f, _)| *f).collect();
    let annihilator: Vec<SparseVec<F>> = kernel.iter().map(|(_, v)| SparseVec::from_dense(v)).collect();
    let mut is_free = vec![false; d];
    for &f in &free {
        is_free[f] = true;
    }
    let complement: Vec<usize> = (0..d).filter(|&i| !is_free[i]).collect();
    let mut grading = AnnihilatorGrading {
        annihilator,
        free,
        complement,
        graded: GradedAlgebra {
            degree1: Vec::new(),
            degree2: Vec::new(),
            product: Vec::new(),
        },
    };
    let mut product = Vec::with_capacity(grading.complement.len());
    for &i in &grading.complement {
        let mut row = Vec::with_capacity(grading.complement.len());
        for &j in &grading.complement {
            let coords = grading
                .annihilator_coords(a.product(i, j))
                .ok_or(AlgebraError::NotTwoStep(i, j))?;
            row.push(coords);
        }
        product.push(row);
    }
    let degree1 = grading.complement.iter().map(|&i| a.basis()[i].clone()).collect();
    let degree2 = grading
        .annihilator
        .iter()
        .zip(&grading.free)
        .map(|(v, &f)| {
            if v.nnz() == 1 {
                a.basis()[f].clone()
            } else {
                format!("ann({})", a.basis()[f])
            }
        })
        .collect();
    grading.graded = GradedAlgebra {
        degree1,
        degree2,
        product,
    };
    Ok(grading)
}

/// A point of `P(A¹)`, represented with first nonzero coordinate one.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ProjPoint<F> {
    rep: Vec<F>,
}

impl<F: Field> ProjPoint<F> {
    /// Normalizes a nonzero vector; `None` for zero.
    pub fn new(v: Vec<F>) -> Option<Self> {
        let lead = v.iter().find(|x| !x.is_zero())?.inv()?;
        Some(ProjPoint {
            rep: v.into_iter().map(|x| x * lead.clone()).collect(),
        })
    }

    pub fn representative(&self) -> &[F] {
        &self.rep
    }

    /// Indices of nonzero coordinates.
    pub fn support(&self) -> Vec<usize> {
        self.rep
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(i, _)| i)
            .collect()
    }
}

impl<F: Field> fmt::Display for ProjPoint<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, x) in self.rep.iter().enumerate() {
            if i > 0 {
                write!(f, ":")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "]")
    }
}

/// Number of points of `P^{d-1}(F_q)`, after checking `q^d` against the cap.
fn projective_size(q: u64, d: usize, cap: u128) -> Result<usize, AlgebraError> {
    let total = (q as u128)
        .checked_pow(d as u32)
        .filter(|&t| t <= cap)
        .ok_or(AlgebraError::EnumerationCap {
            points: (q as u128).saturating_pow(d as u32),
            cap,
        })?;
    Ok(((total - 1) / (q as u128 - 1)) as usize)
}

/// Every normalized nonzero vector of length `d`: grouped by the position
/// of the leading one, trailing coordinates in lexicographic element order.
fn enumerate_projective<F: Field>(elements: &[F], d: usize) -> Vec<ProjPoint<F>> {
    let q = elements.len();
    let mut out = Vec::new();
    for lead in 0..d {
        let tail = d - lead - 1;
        let count = q.pow(tail as u32);
        for code in 0..count {
            let mut rep = vec![F::zero(); d];
            rep[lead] = F::one();
            let mut c = code;
            for pos in (lead + 1..d).rev() {
                rep[pos] = elements[c % q].clone();
                c /= q;
            }
            out.push(ProjPoint { rep });
        }
    }
    out
}

/// The dependence relation and the minimal points of `P(A¹)`.
#[derive(Debug, Clone)]
pub struct Dependence<F> {
    pub points: Vec<ProjPoint<F>>,
    /// `rows[p]` is the bitset `p^#`.
    rows: Vec<Vec<u64>>,
    pub minimal: Vec<usize>,
}

impl<F> Dependence<F> {
    pub fn depends(&self, p: usize, q: usize) -> bool {
        self.rows[p][q / 64] >> (q % 64) & 1 == 1
    }
}

/// Enumerates `P(A¹)`, computes `[a] # [b] ⟺ ab ≠ 0` and the minimal
/// points of the preorder `p ≲ q ⟺ p^# ⊆ q^#`.
pub fn dependence<F: Field>(ag: &GradedAlgebra<F>, cap: u128) -> Result<Dependence<F>, AlgebraError> {
    let elements = F::elements().ok_or(AlgebraError::InfiniteField)?;
    let d1 = ag.dim1();
    let d2 = ag.dim2();
    let expected = projective_size(elements.len() as u64, d1, cap)?;
    let points = enumerate_projective(&elements, d1);
    debug_assert_eq!(points.len(), expected);

    // Dense product operators: ops[i][k][j] = coefficient of basis k in e_i e_j.
    let ops: Vec<Vec<Vec<F>>> = (0..d1)
        .map(|i| {
            let mut m = vec![vec![F::zero(); d1]; d2];
            for j in 0..d1 {
                for (k, v) in ag.product(i, j).entries() {
                    m[*k][j] = v.clone();
                }
            }
            m
        })
        .collect();
    let words = points.len().div_ceil(64);
    let rows: Vec<Vec<u64>> = points
        .par_iter()
        .map(|a| {
            // M_a = Σ_i a_i ops[i]
            let mut m = vec![vec![F::zero(); d1]; d2];
            for (i, ai) in a.rep.iter().enumerate() {
                if ai.is_zero() {
                    continue;
                }
                for k in 0..d2 {
                    for j in 0..d1 {
                        let v = &ops[i][k][j];
                        if !v.is_zero() {
                            m[k][j] = m[k][j].clone() + ai.clone() * v.clone();
                        }
                    }
                }
            }
            let m: Vec<Vec<(usize, F)>> = m
                .into_iter()
                .map(|row| {
                    row.into_iter()
                        .enumerate()
                        .filter(|(_, v)| !v.is_zero())
                        .collect()
                })
                .filter(|row: &Vec<(usize, F)>| !row.is_empty())
                .collect();
            let mut bits = vec![0u64; words];
            for (q, b) in points.iter().enumerate() {
                let nonzero = m.iter().any(|row| {
                    let s = row
                        .iter()
                        .fold(F::zero(), |acc, (j, v)| acc + v.clone() * b.rep[*j].clone());
                    !s.is_zero()
                });
                if nonzero {
                    bits[q / 64] |= 1 << (q % 64);
                }
            }
            bits
        })
        .collect();

    let subset = |a: &[u64], b: &[u64]| a.iter().zip(b).all(|(x, y)| x & !y == 0);
    let minimal: Vec<usize> = (0..points.len())
        .into_par_iter()
        .filter(|&p| {
            (0..points.len()).all(|s| s == p || !subset(&rows[s], &rows[p]))
        })
        .collect();
    Ok(Dependence {
        points,
        rows,
        minimal,
    })
}

/// The minimal points of `P(A¹)`.
pub fn minimal_points<F: Field>(ag: &GradedAlgebra<F>, cap: u128) -> Result<Vec<ProjPoint<F>>, AlgebraError> {
    let dep = dependence(ag, cap)?;
    Ok(dep.minimal.iter().map(|&p| dep.points[p].clone()).collect())
}

/// Recovers a graph from an ungraded algebra: vertices are the minimal
/// points of `P(B¹)`, related when dependent.
pub fn reconstruct_graph<F: Field>(a: &Algebra<F>, cap: u128) -> Result<Graph, AlgebraError> {
    let grading = annihilator_grading(a)?;
    let dep = dependence(&grading.graded, cap)?;
    let labels: Vec<String> = dep.minimal.iter().map(|&p| dep.points[p].to_string()).collect();
    let mut edges = Vec::new();
    for (i, &p) in dep.minimal.iter().enumerate() {
        for (j, &q) in dep.minimal.iter().enumerate().skip(i + 1) {
            if dep.depends(p, q) {
                edges.push((i, j));
            }
        }
    }
    Ok(Graph::from_index_edges(labels, edges))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Fp;
    use crate::graphs::{build_b, Crowns};
    use crate::monoid::Sign;
    use num_rational::BigRational;
    use num_traits::Zero;

    type Q = BigRational;
    type F2 = Fp<2>;

    fn edge_graph() -> Graph {
        Graph::new(["a", "b"], [("a", "b")]).unwrap()
    }

    #[test]
    fn dimensions() {
        let b = build_b(2);
        assert_eq!(q_ungraded::<Q>(&b).dim(), 40);
        let cr = Crowns::new(2).unwrap();
        for s in Sign::BOTH {
            assert_eq!(q_ungraded::<Q>(cr.crown(s)).dim(), 36);
        }
    }

    #[test]
    fn products_follow_adjacency() {
        let g = Graph::new(["a", "b", "c"], [("a", "b")]).unwrap();
        let q = q_graded::<Q>(&g);
        assert_eq!(q.degree2(), ["a*a", "b*b", "c*c", "a*b"]);
        assert_eq!(q.product(0, 1), &SparseVec::unit(3));
        assert_eq!(q.product(1, 0), &SparseVec::unit(3));
        assert!(q.product(0, 2).is_zero());
        assert_eq!(q.product(2, 2), &SparseVec::unit(2));
    }

    #[test]
    fn multiset_products() {
        let a = q_ungraded::<Q>(&edge_graph());
        assert_eq!(a.mult_multiset(&[1]).unwrap(), SparseVec::unit(1));
        assert_eq!(a.mult_multiset(&[0, 1]).unwrap(), SparseVec::unit(4));
        assert!(a.mult_multiset(&[0, 1, 0]).unwrap().is_zero());
        assert!(matches!(a.mult_multiset(&[]), Err(AlgebraError::EmptyProduct)));
    }

    #[test]
    fn identity_pullback() {
        let g = Arc::new(build_b(1));
        let m = q_hom_matrix::<Q>(&GraphMorphism::identity(g.clone()));
        assert_eq!(m, Matrix::identity(q_ungraded::<Q>(&g).dim()));
    }

    #[test]
    fn collapsed_edge_in_characteristic_two() {
        let edge = Arc::new(edge_graph());
        let point = Arc::new(Graph::new(["p"], Vec::<(&str, &str)>::new()).unwrap());
        let f = GraphMorphism::new(vec![0, 0], edge, point).unwrap();
        let hq = q_hom::<Q>(&f);
        assert!(hq.is_multiplicative());
        // δ_p*δ_p ↦ a*a + b*b + 2 a*b
        let col = hq.matrix().column(1);
        assert_eq!(col.get(4), Q::from_i64(2));
        let h2 = q_hom::<F2>(&f);
        assert!(h2.is_multiplicative());
        assert!(h2.matrix().column(1).get(4).is_zero());
    }

    #[test]
    fn crown_projection_is_injective() {
        let cr = Crowns::new(2).unwrap();
        let h = q_hom::<Q>(cr.projection(Sign::Plus));
        assert_eq!(h.matrix().shape(), (40, 36));
        assert_eq!(h.matrix().rank(), 36);
        assert!(h.is_multiplicative());
    }

    #[test]
    fn cover_examples() {
        let cr = Crowns::new(3).unwrap();
        assert!(cover_injectivity::<Q>(cr.pieces()).unwrap());
        assert!(cover_injectivity::<F2>(&[cr.projection(Sign::Minus).clone()]).unwrap());
        assert!(cover_injectivity::<Q>(&[GraphMorphism::identity(cr.strip().clone())]).unwrap());
        assert!(matches!(
            cover_injectivity::<Q>(&cr.pieces()[..1]),
            Err(AlgebraError::NotACover)
        ));
    }

    #[test]
    fn annihilator_examples() {
        let g = edge_graph();
        let gr = annihilator_grading(&q_ungraded::<Q>(&g)).unwrap();
        assert_eq!(gr.graded.dim1(), 2);
        assert_eq!(gr.graded.dim2(), 3);
        let z = annihilator_grading(&Algebra::<Q>::zero_product(4)).unwrap();
        assert_eq!(z.graded.dim1(), 0);
        assert_eq!(z.graded.dim2(), 4);
    }

    #[test]
    fn annihilator_rejects_non_nilpotent() {
        // a one-dimensional algebra with e*e = e
        let a = Algebra::<Q>::new(vec!["e".into()], vec![vec![SparseVec::unit(0)]]).unwrap();
        assert!(matches!(annihilator_grading(&a), Err(AlgebraError::NotTwoStep(0, 0))));
    }

    #[test]
    fn single_point_is_minimal() {
        let g = Graph::new(["a"], Vec::<(&str, &str)>::new()).unwrap();
        let pts = minimal_points(&q_graded::<Fp<3>>(&g), DEFAULT_PROJ_CAP).unwrap();
        assert_eq!(pts.len(), 1);
        assert_eq!(pts[0].to_string(), "[1]");
        assert_eq!(reconstruct_graph(&q_ungraded::<Fp<3>>(&g), DEFAULT_PROJ_CAP).unwrap().num_vertices(), 1);
    }

    #[test]
    fn rationals_cannot_enumerate() {
        let g = edge_graph();
        assert!(matches!(
            minimal_points(&q_graded::<Q>(&g), DEFAULT_PROJ_CAP),
            Err(AlgebraError::InfiniteField)
        ));
        assert!(matches!(
            minimal_points(&q_graded::<F2>(&build_b(2)), 1 << 10),
            Err(AlgebraError::EnumerationCap { .. })
        ));
    }

    #[test]
    fn json_shape() {
        let a = q_ungraded::<Q>(&edge_graph());
        let j = a.to_json();
        assert_eq!(j["field"], "rational");
        assert_eq!(j["basis"].as_array().unwrap().len(), 5);
        // a*a, a*b, b*a, b*b
        assert_eq!(j["structure_constants"].as_array().unwrap().len(), 4);
        assert_eq!(j["structure_constants"][0], json!([0, 0, [[2, "1"]]]));
    }
}
