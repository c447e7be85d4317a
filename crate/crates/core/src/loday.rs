//! The surjection category, the Loday representation of an algebra, and
//! the cofunctors induced by the `W_n` actions on the strip and the crowns.
//!
//! A functor `Ω_r → k-Mod` is represented by its matrices on morphisms, and
//! a morphism of such functors by one matrix per object `⟨p⟩`, `p = 1..=r`.
//! Tensor powers use the lexicographic basis of [`crate::linalg`].

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::algebra::{q_hom_matrix, q_ungraded, Algebra};
use crate::error::LodayError;
use crate::field::Field;
use crate::graphs::Crowns;
use crate::linalg::{Matrix, SparseVec};
use crate::monoid::{build_t, build_z, g_product, gen_g, homset_member, homset_target, MonoidAlgElem, Sign, Word};
use crate::Caps;

/// A surjection `⟨p⟩ → ⟨q⟩`; `images[i - 1]` is the image of `i`, 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Surjection {
    q: usize,
    images: Vec<usize>,
}

impl Surjection {
    pub fn new(q: usize, images: Vec<usize>) -> Result<Self, LodayError> {
        let p = images.len();
        if q == 0 || p < q {
            return Err(LodayError::InvalidSurjection(format!("⟨{p}⟩ → ⟨{q}⟩")));
        }
        let mut hit = vec![false; q];
        for &j in &images {
            if j == 0 || j > q {
                return Err(LodayError::InvalidSurjection(format!("value {j} outside 1..={q}")));
            }
            hit[j - 1] = true;
        }
        if let Some(missed) = hit.iter().position(|h| !h) {
            return Err(LodayError::InvalidSurjection(format!("{} not attained", missed + 1)));
        }
        Ok(Surjection { q, images })
    }

    pub fn identity(p: usize) -> Self {
        Surjection {
            q: p,
            images: (1..=p).collect(),
        }
    }

    pub fn source(&self) -> usize {
        self.images.len()
    }

    pub fn target(&self) -> usize {
        self.q
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i + 1 == j)
    }

    /// 0-based positions of the preimage of `j` (1-based).
    pub fn fibre(&self, j: usize) -> Vec<usize> {
        self.images
            .iter()
            .enumerate()
            .filter(|(_, &v)| v == j)
            .map(|(i, _)| i)
            .collect()
    }
}

impl fmt::Display for Surjection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{}>-><{}>:{:?}", self.source(), self.q, self.images)
    }
}

/// `t ∘ s`.
pub fn surj_compose(t: &Surjection, s: &Surjection) -> Result<Surjection, LodayError> {
    if s.target() != t.source() {
        return Err(LodayError::ComposeMismatch(t.to_string(), s.to_string()));
    }
    Ok(Surjection {
        q: t.q,
        images: s.images.iter().map(|&j| t.images[j - 1]).collect(),
    })
}

/// All surjections `⟨p⟩ → ⟨q⟩`, in lexicographic order of image sequences.
pub fn surjections(p: usize, q: usize, cap: usize) -> Result<Vec<Surjection>, LodayError> {
    if p > cap {
        return Err(LodayError::SurjectionCap { p, cap });
    }
    if p == 0 || q == 0 {
        return Err(LodayError::InvalidSurjection(format!("⟨{p}⟩ → ⟨{q}⟩")));
    }
    if p < q {
        return Ok(Vec::new());
    }
    let total = q.pow(p as u32);
    Ok((0..total)
        .filter_map(|code| {
            let mut images = vec![0; p];
            let mut c = code;
            for slot in images.iter_mut().rev() {
                *slot = c % q + 1;
                c /= q;
            }
            Surjection::new(q, images).ok()
        })
        .collect())
}

/// Every morphism of `Ω_r`, grouped by source.
fn all_surjections(r: usize, cap: usize) -> Result<Vec<Surjection>, LodayError> {
    let mut out = Vec::new();
    for p in 1..=r {
        for q in 1..=p {
            out.extend(surjections(p, q, cap)?);
        }
    }
    Ok(out)
}

pub(crate) fn check_tensor_dim(d: usize, p: usize, cap: u128) -> Result<usize, LodayError> {
    let dim = (d as u128).checked_pow(p as u32).unwrap_or(u128::MAX);
    if dim > cap {
        return Err(LodayError::TensorCap { dim, cap });
    }
    Ok(dim as usize)
}

/// Multi-index of a flat tensor index, most significant factor first.
pub(crate) fn digits(mut index: usize, d: usize, p: usize) -> Vec<usize> {
    let mut out = vec![0; p];
    for slot in out.iter_mut().rev() {
        *slot = index % d;
        index /= d;
    }
    out
}

/// The matrix of `L(A)(s): A^{⊗p} → A^{⊗q}`,
/// `a_1 ⊗ … ⊗ a_p ↦ m_1 ⊗ … ⊗ m_q` with `m_j` the product over `s^{-1}(j)`.
pub fn loday_matrix<F: Field>(a: &Algebra<F>, s: &Surjection, caps: &Caps) -> Result<Matrix<F>, LodayError> {
    let d = a.dim();
    let p = s.source();
    let q = s.target();
    let cols = check_tensor_dim(d, p, caps.max_tensor_dim)?;
    let rows = check_tensor_dim(d, q, caps.max_tensor_dim)?;
    let fibres: Vec<Vec<usize>> = (1..=q).map(|j| s.fibre(j)).collect();
    // Products of the same multiset recur across columns.
    let cache: HashMap<Vec<usize>, SparseVec<F>> = {
        let mut keys = std::collections::BTreeSet::new();
        for col in 0..cols {
            let ks = digits(col, d, p);
            for fib in &fibres {
                let mut key: Vec<usize> = fib.iter().map(|&i| ks[i]).collect();
                key.sort_unstable();
                keys.insert(key);
            }
        }
        keys.into_iter()
            .map(|k| a.mult_multiset(&k).map(|v| (k, v)))
            .collect::<Result<_, _>>()?
    };
    let columns: Vec<SparseVec<F>> = (0..cols)
        .into_par_iter()
        .map(|col| {
            let ks = digits(col, d, p);
            let mut acc = SparseVec::unit(0);
            for fib in &fibres {
                let mut key: Vec<usize> = fib.iter().map(|&i| ks[i]).collect();
                key.sort_unstable();
                let m = &cache[&key];
                if m.is_zero() {
                    return SparseVec::zero();
                }
                acc = acc.kron(m, d);
            }
            acc
        })
        .collect();
    Ok(Matrix::from_columns(rows, columns)?)
}

/// Outcome of an exhaustive law check: how many instances were compared and
/// the first failing one, if any.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LawCheck {
    pub checked: usize,
    pub failure: Option<String>,
}

impl LawCheck {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

/// Checks that `L^r(A)` preserves identities and composition.
pub fn functor_check<F: Field>(a: &Algebra<F>, r: usize, caps: &Caps) -> Result<LawCheck, LodayError> {
    let morphisms = all_surjections(r, caps.max_surjection_size)?;
    let matrices: HashMap<&Surjection, Matrix<F>> = morphisms
        .iter()
        .map(|s| loday_matrix(a, s, caps).map(|m| (s, m)))
        .collect::<Result<_, _>>()?;
    let mut checked = 0;
    for s in morphisms.iter().filter(|s| s.is_identity()) {
        checked += 1;
        let dim = matrices[s].cols();
        if matrices[s] != Matrix::identity(dim) {
            return Ok(LawCheck {
                checked,
                failure: Some(format!("L({s}) is not the identity")),
            });
        }
    }
    for s in &morphisms {
        for t in morphisms.iter().filter(|t| t.source() == s.target()) {
            checked += 1;
            let ts = surj_compose(t, s)?;
            let composite = matrices[t].compose(&matrices[s])?;
            if composite != matrices[&ts] {
                return Ok(LawCheck {
                    checked,
                    failure: Some(format!("L({t}) L({s}) != L({ts})")),
                });
            }
        }
    }
    Ok(LawCheck {
        checked,
        failure: None,
    })
}

/// A morphism `L^r(source) → L^r(target)`: `components[p - 1]` acts on the
/// `p`-th tensor power.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NatTransData<F> {
    r: usize,
    source: Arc<Algebra<F>>,
    target: Arc<Algebra<F>>,
    components: Vec<Matrix<F>>,
}

impl<F: Field> NatTransData<F> {
    pub fn new(
        source: Arc<Algebra<F>>,
        target: Arc<Algebra<F>>,
        components: Vec<Matrix<F>>,
    ) -> Result<Self, LodayError> {
        for (k, m) in components.iter().enumerate() {
            let p = k as u32 + 1;
            let expected = (target.dim().pow(p), source.dim().pow(p));
            if m.shape() != expected {
                return Err(LodayError::Linalg(crate::error::LinalgError::DimensionMismatch {
                    op: "nat_trans component",
                    left: m.shape(),
                    right: expected,
                }));
            }
        }
        Ok(NatTransData {
            r: components.len(),
            source,
            target,
            components,
        })
    }

    pub fn identity(a: Arc<Algebra<F>>, r: usize) -> Self {
        let components = (1..=r).map(|p| Matrix::identity(a.dim().pow(p as u32))).collect();
        NatTransData {
            r,
            source: a.clone(),
            target: a,
            components,
        }
    }

    pub fn truncation(&self) -> usize {
        self.r
    }

    pub fn source(&self) -> &Arc<Algebra<F>> {
        &self.source
    }

    pub fn target(&self) -> &Arc<Algebra<F>> {
        &self.target
    }

    /// The matrix at object `⟨p⟩`, `p >= 1`.
    pub fn component(&self, p: usize) -> &Matrix<F> {
        &self.components[p - 1]
    }

    pub fn components_mut(&mut self) -> &mut [Matrix<F>] {
        &mut self.components
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(Matrix::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.components
            .iter()
            .all(|m| m.rows() == m.cols() && *m == Matrix::identity(m.cols()))
    }

    /// `self ∘ other` (apply `other` first).
    pub fn compose(&self, other: &NatTransData<F>) -> Result<NatTransData<F>, LodayError> {
        if self.r != other.r {
            return Err(LodayError::TruncationMismatch(self.r, other.r));
        }
        let components = self
            .components
            .iter()
            .zip(&other.components)
            .map(|(a, b)| a.compose(b))
            .collect::<Result<_, _>>()?;
        Ok(NatTransData {
            r: self.r,
            source: other.source.clone(),
            target: self.target.clone(),
            components,
        })
    }

    pub fn sub(&self, other: &NatTransData<F>) -> Result<NatTransData<F>, LodayError> {
        if self.r != other.r {
            return Err(LodayError::TruncationMismatch(self.r, other.r));
        }
        let components = self
            .components
            .iter()
            .zip(&other.components)
            .map(|(a, b)| a.sub(b))
            .collect::<Result<_, _>>()?;
        Ok(NatTransData {
            r: self.r,
            source: self.source.clone(),
            target: self.target.clone(),
            components,
        })
    }

    /// First object `p` and entry `(row, col)` where `self` and `other` differ.
    pub fn first_difference(&self, other: &NatTransData<F>) -> Option<(usize, usize, usize)> {
        self.components
            .iter()
            .zip(&other.components)
            .enumerate()
            .find_map(|(k, (a, b))| {
                let diff = a.sub(b).ok()?;
                diff.first_nonzero().map(|(row, col, _)| (k + 1, row, col))
            })
    }

    /// `{r, dims, components}`; `components[p - 1]` is a list of sparse
    /// `[row, col, coeff]` triples sorted by `(row, col)`.
    pub fn to_json(&self) -> Value {
        let components: Vec<Value> = self
            .components
            .iter()
            .map(|m| {
                Value::Array(
                    m.triplets()
                        .into_iter()
                        .map(|(r, c, v)| json!([r, c, v.to_string()]))
                        .collect(),
                )
            })
            .collect();
        json!({
            "r": self.r,
            "dims": [self.source.dim(), self.target.dim()],
            "components": components,
        })
    }
}

/// Checks every naturality square `η_q L_src(s) = L_tgt(s) η_p`.
pub fn naturality_check<F: Field>(eta: &NatTransData<F>, caps: &Caps) -> Result<LawCheck, LodayError> {
    let mut checked = 0;
    for s in all_surjections(eta.r, caps.max_surjection_size)? {
        checked += 1;
        let (p, q) = (s.source(), s.target());
        let lhs = eta.component(q).compose(&loday_matrix(&eta.source, &s, caps)?)?;
        let rhs = loday_matrix(&eta.target, &s, caps)?.compose(eta.component(p))?;
        if lhs != rhs {
            let witness = lhs
                .sub(&rhs)?
                .first_nonzero()
                .map(|(row, col, _)| format!(" (first differing entry ({row}, {col}))"))
                .unwrap_or_default();
            return Ok(LawCheck {
                checked,
                failure: Some(format!("square for {s} does not commute{witness}")),
            });
        }
    }
    Ok(LawCheck {
        checked,
        failure: None,
    })
}

/// Which graph the monoid acts on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Target {
    /// `B_n`, through `W_n \\ {*}`.
    Strip,
    /// The crowns, through `W_n \\ U`.
    Crown,
}

/// Cached algebras and pullback matrices for one level.
#[derive(Debug, Clone)]
pub struct CrownAlgebras<F> {
    pub crowns: Crowns,
    pub strip: Arc<Algebra<F>>,
    pub plus: Arc<Algebra<F>>,
    pub minus: Arc<Algebra<F>>,
}

impl<F: Field> CrownAlgebras<F> {
    pub fn new(crowns: Crowns) -> Self {
        let strip = Arc::new(q_ungraded(crowns.strip()));
        let plus = Arc::new(q_ungraded(crowns.crown(Sign::Plus)));
        let minus = Arc::new(q_ungraded(crowns.crown(Sign::Minus)));
        CrownAlgebras {
            crowns,
            strip,
            plus,
            minus,
        }
    }

    pub fn level(&self) -> usize {
        self.crowns.level()
    }

    pub fn crown(&self, s: Sign) -> &Arc<Algebra<F>> {
        match s {
            Sign::Plus => &self.plus,
            Sign::Minus => &self.minus,
        }
    }

    /// `Q(w_*)` on `Q(B_n)`.
    pub fn strip_action(&self, w: &Word) -> Result<Matrix<F>, LodayError> {
        Ok(q_hom_matrix(&self.crowns.act_on_b(w)?))
    }

    /// `Q(w_*): Q(C_n^t) → Q(C_n^s)` for `w_*: C_n^s → C_n^t`.
    pub fn crown_action(&self, w: &Word, s: Sign) -> Result<Matrix<F>, LodayError> {
        Ok(q_hom_matrix(&self.crowns.act_on_c(w, s)?))
    }

    /// `Q(f_n^s): Q(C_n^s) → Q(B_n)`.
    pub fn projection(&self, s: Sign) -> Matrix<F> {
        q_hom_matrix(self.crowns.projection(s))
    }
}

/// `b_n^r(X‖_{*→*})` for `target = Strip`, `c_n^r(X‖_{s→t})` for `target = Crown`.
///
/// The component at `⟨p⟩` is `Σ_w c_w Q(w_*)^{⊗p}`: each monoid term is
/// raised to the tensor power before the terms are summed.
pub fn cofunctor_eval<F: Field>(
    algs: &CrownAlgebras<F>,
    r: usize,
    x: &MonoidAlgElem<F>,
    s: Sign,
    t: Sign,
    target: Target,
    caps: &Caps,
) -> Result<NatTransData<F>, LodayError> {
    let (src, tgt) = match target {
        Target::Strip => (algs.strip.clone(), algs.strip.clone()),
        Target::Crown => {
            if !homset_member(x, s, t) {
                return Err(LodayError::HomSet {
                    s: s.to_string(),
                    t: t.to_string(),
                });
            }
            (algs.crown(t).clone(), algs.crown(s).clone())
        }
    };
    for p in 1..=r {
        check_tensor_dim(src.dim().max(tgt.dim()), p, caps.max_tensor_dim)?;
    }
    let mut components: Vec<Matrix<F>> = (1..=r)
        .map(|p| Matrix::zeros(tgt.dim().pow(p as u32), src.dim().pow(p as u32)))
        .collect();
    for (w, c) in x.terms() {
        let m = match target {
            Target::Strip => algs.strip_action(w)?,
            Target::Crown => algs.crown_action(w, s)?,
        };
        let mut power = Matrix::identity(1);
        for comp in components.iter_mut() {
            power = power.kron(&m);
            *comp = comp.axpy(c, &power)?;
        }
    }
    NatTransData::new(src, tgt, components)
}

/// Lowest-index nonzero entry of `Σ_S (-1)^{|S|} Q(g_S)^{⊗p}` on `Q(B_n)^{⊗p}`,
/// as `(column, row)`, evaluated one basis tensor at a time.
pub fn z_action_witness<F: Field>(
    algs: &CrownAlgebras<F>,
    p: usize,
    caps: &Caps,
) -> Result<Option<(usize, usize)>, LodayError> {
    let n = algs.level();
    let d = algs.strip.dim();
    let cols = check_tensor_dim(d, p, caps.max_tensor_dim)?;
    let terms: Vec<(F, Matrix<F>)> = (0..1usize << n)
        .map(|mask| {
            let subset: Vec<usize> = (1..=n).filter(|i| mask >> (i - 1) & 1 == 1).collect();
            let sign = if subset.len() % 2 == 0 { F::one() } else { -F::one() };
            let w = g_product(n, &subset)?;
            Ok((sign, algs.strip_action(&w)?))
        })
        .collect::<Result<_, LodayError>>()?;
    let witness = (0..cols).into_par_iter().find_map_first(|col| {
        let ks = digits(col, d, p);
        let mut acc = SparseVec::zero();
        for (sign, m) in &terms {
            acc = acc.axpy(sign, &m.kron_power_column(&ks));
        }
        acc.first_nonzero().map(|(row, _)| (col, row))
    });
    Ok(witness)
}

/// Whether `Z_n` acts as zero on `Q(B_n)^{⊗p}`. Holds for `p < n`; for
/// larger `p` the evaluator still runs but nothing is claimed.
pub fn lemma_check<F: Field>(algs: &CrownAlgebras<F>, p: usize, caps: &Caps) -> Result<bool, LodayError> {
    if p == 0 {
        return Err(LodayError::LemmaRange { n: algs.level(), p });
    }
    Ok(z_action_witness(algs, p, caps)?.is_none())
}

/// The annihilation argument replayed step by step.
#[derive(Debug, Clone, Serialize)]
pub struct LemmaTrace {
    pub n: usize,
    pub p: usize,
    /// Shape of `E_p: Q(B_n)^{⊗p} → ⊕ S_{i_1…i_p}`.
    pub e_rows: usize,
    pub e_cols: usize,
    pub e_rank: usize,
    pub injective: bool,
    /// `E_p` commutes with the action of every word.
    pub intertwines: bool,
    pub words_checked: usize,
    /// `g_i` acts as the identity on `Q(F_{i'})` for `i' != i`.
    pub trivial_off_piece: bool,
    /// Tuples `(i_1..i_p)` missing some index, out of `n^p`.
    pub tuples_missing_index: usize,
    pub tuples_total: usize,
    /// Summands `S_{i_1…i_p}` on which `Z_n` was verified to vanish.
    pub summands_annihilated: usize,
}

impl LemmaTrace {
    pub fn passed(&self) -> bool {
        self.injective
            && self.intertwines
            && self.trivial_off_piece
            && self.tuples_missing_index == self.tuples_total
            && self.summands_annihilated == self.tuples_total
    }
}

/// Replays the annihilation proof: injectivity of `E_p`, equivariance,
/// triviality of `g_i` away from `F_i`, and vanishing of `Z_n` on each summand.
pub fn lemma_proof_trace<F: Field>(algs: &CrownAlgebras<F>, p: usize, caps: &Caps) -> Result<LemmaTrace, LodayError> {
    let n = algs.level();
    if p == 0 {
        return Err(LodayError::LemmaRange { n, p });
    }
    let crowns = &algs.crowns;
    let d = algs.strip.dim();
    check_tensor_dim(d, p, caps.max_tensor_dim)?;
    let piece_dims: Vec<usize> = crowns
        .pieces()
        .iter()
        .map(|e| q_ungraded::<F>(e.source()).dim())
        .collect();
    let stacked_dim: usize = piece_dims.iter().sum();
    check_tensor_dim(stacked_dim, p, caps.max_tensor_dim)?;

    // (i) E_p = (stacked Q(e_i))^{⊗p} is injective.
    let blocks: Vec<Matrix<F>> = crowns.pieces().iter().map(q_hom_matrix).collect();
    let e1 = Matrix::vstack(&blocks)?;
    let ep = e1.kron_power(p);
    let e_rank = ep.rank();

    // (ii) E_p Q(w)^{⊗p} = D_w^{⊗p} E_p for every word.
    let words = crate::monoid::wn_enumerate(n, caps.max_level)?;
    let mut intertwines = true;
    for w in &words {
        let on_b = algs.strip_action(w)?.kron_power(p);
        let pieces: Vec<Matrix<F>> = (1..=n)
            .map(|i| Ok(q_hom_matrix(&crowns.act_on_piece(w, i)?)))
            .collect::<Result<_, LodayError>>()?;
        let on_pieces = Matrix::block_diag(&pieces).kron_power(p);
        if ep.compose(&on_b)? != on_pieces.compose(&ep)? {
            intertwines = false;
            break;
        }
    }

    // (iii) g_i is trivial on F_{i'} for i' != i.
    let mut piece_actions: Vec<Vec<Matrix<F>>> = Vec::with_capacity(n);
    let mut trivial_off_piece = true;
    for i in 1..=n {
        let g = gen_g(n, i)?;
        let row: Vec<Matrix<F>> = (1..=n)
            .map(|ip| Ok(q_hom_matrix(&crowns.act_on_piece(&g, ip)?)))
            .collect::<Result<_, LodayError>>()?;
        for (k, m) in row.iter().enumerate() {
            if k + 1 != i && *m != Matrix::identity(piece_dims[k]) {
                trivial_off_piece = false;
            }
        }
        piece_actions.push(row);
    }

    // (iv) and the per-summand vanishing of Z_n.
    let tuples_total = n.pow(p as u32);
    let mut tuples_missing_index = 0;
    let mut summands_annihilated = 0;
    for code in 0..tuples_total {
        let tuple: Vec<usize> = digits(code, n, p);
        if (0..n).any(|i| !tuple.contains(&i)) {
            tuples_missing_index += 1;
        }
        // Σ_S (-1)^{|S|} ⊗_m Q(g_S | F_{i_m})
        let dim: usize = tuple.iter().map(|&i| piece_dims[i]).product();
        let mut total = Matrix::zeros(dim, dim);
        for mask in 0..1usize << n {
            let sign = if mask.count_ones() % 2 == 0 { F::one() } else { -F::one() };
            let mut term = Matrix::identity(1);
            for &i in &tuple {
                let mut factor = Matrix::identity(piece_dims[i]);
                for g in (0..n).filter(|g| mask >> g & 1 == 1) {
                    factor = piece_actions[g][i].compose(&factor)?;
                }
                term = term.kron(&factor);
            }
            total = total.axpy(&sign, &term)?;
        }
        if total.is_zero() {
            summands_annihilated += 1;
        }
    }

    Ok(LemmaTrace {
        n,
        p,
        e_rows: ep.rows(),
        e_cols: ep.cols(),
        e_rank,
        injective: e_rank == ep.cols(),
        intertwines,
        words_checked: words.len(),
        trivial_off_piece,
        tuples_missing_index,
        tuples_total,
        summands_annihilated,
    })
}

/// Whether `b(X)_p ∘ Q(f^t)^{⊗p} = Q(f^s)^{⊗p} ∘ c(X‖_{s→t})_p` for `p <= r`.
pub fn transport_square_check<F: Field>(
    algs: &CrownAlgebras<F>,
    r: usize,
    x: &MonoidAlgElem<F>,
    s: Sign,
    t: Sign,
    caps: &Caps,
) -> Result<bool, LodayError> {
    let b = cofunctor_eval(algs, r, x, s, t, Target::Strip, caps)?;
    let c = cofunctor_eval(algs, r, x, s, t, Target::Crown, caps)?;
    let (fs, ft) = (algs.projection(s), algs.projection(t));
    let mut fs_pow = Matrix::identity(1);
    let mut ft_pow = Matrix::identity(1);
    for p in 1..=r {
        fs_pow = fs_pow.kron(&fs);
        ft_pow = ft_pow.kron(&ft);
        let lhs = b.component(p).compose(&ft_pow)?;
        let rhs = fs_pow.compose(c.component(p))?;
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Per-sign outcome of [`mutual_inverse_check`].
#[derive(Debug, Clone, Serialize)]
pub struct CompositeCheck {
    /// `s`, the object the composite `η_s ∘ η_{t(s)}` ends at.
    pub sign: Sign,
    /// The composite is the identity at every object.
    pub identity: bool,
    /// First `(p, row, col)` where it is not.
    pub witness: Option<(usize, usize, usize)>,
    /// The composite equals `c((X X)‖)`.
    pub factors: bool,
    /// The composite equals `1 - c(Z_n‖_{s→s})`; only meaningful when the
    /// composite returns to `s`.
    pub matches_one_minus_z: Option<bool>,
}

#[derive(Debug, Clone, Serialize)]
pub struct IsoReport {
    pub n: usize,
    pub r: usize,
    pub natural_plus: LawCheck,
    pub natural_minus: LawCheck,
    pub z_vanishes: bool,
    pub composites: Vec<CompositeCheck>,
}

impl IsoReport {
    pub fn passed(&self) -> bool {
        self.natural_plus.passed()
            && self.natural_minus.passed()
            && self.composites.iter().all(|c| c.identity)
    }
}

/// For each `s ∈ U` builds `η_s = c^r(X‖_{s→t(s)})`, checks naturality and
/// whether `η_s ∘ η_{t(s)}` is the identity.
///
/// With `X = T_n` and `r = n - 1` this is the isomorphism between the
/// truncated representations of the two crown algebras.
pub fn mutual_inverse_check<F: Field>(
    algs: &CrownAlgebras<F>,
    x: &MonoidAlgElem<F>,
    r: usize,
    caps: &Caps,
) -> Result<IsoReport, LodayError> {
    let n = algs.level();
    let target_of = |s: Sign| {
        homset_target(x, s).ok_or_else(|| LodayError::HomSet {
            s: s.to_string(),
            t: "?".into(),
        })
    };
    let mut etas = HashMap::new();
    for s in Sign::BOTH {
        let t = target_of(s)?;
        etas.insert(s, (t, cofunctor_eval(algs, r, x, s, t, Target::Crown, caps)?));
    }
    let natural_plus = naturality_check(&etas[&Sign::Plus].1, caps)?;
    let natural_minus = naturality_check(&etas[&Sign::Minus].1, caps)?;
    let z = build_z::<F>(n)?;
    let xx = x.mul(x)?;
    let mut z_vanishes = true;
    let mut composites = Vec::new();
    for s in Sign::BOTH {
        let (t, eta_s) = &etas[&s];
        let (t2, eta_t) = &etas[t];
        let composite = eta_s.compose(eta_t)?;
        let id = NatTransData::identity(composite.source().clone(), r);
        let same_object = *t2 == s;
        let witness = if same_object {
            composite.first_difference(&id)
        } else {
            Some((0, 0, 0))
        };
        let factored = cofunctor_eval(algs, r, &xx, s, *t2, Target::Crown, caps)?;
        let matches_one_minus_z = if same_object {
            let cz = cofunctor_eval(algs, r, &z, s, s, Target::Crown, caps)?;
            z_vanishes &= cz.is_zero();
            Some(composite == id.sub(&cz)?)
        } else {
            None
        };
        composites.push(CompositeCheck {
            sign: s,
            identity: witness.is_none(),
            witness,
            factors: composite == factored,
            matches_one_minus_z,
        });
    }
    Ok(IsoReport {
        n,
        r,
        natural_plus,
        natural_minus,
        z_vanishes,
        composites,
    })
}

/// `mutual_inverse_check` with `X = T_n` and `r = n - 1`.
pub fn iso_check<F: Field>(algs: &CrownAlgebras<F>, caps: &Caps) -> Result<IsoReport, LodayError> {
    let n = algs.level();
    let t = build_t::<F>(n)?;
    mutual_inverse_check(algs, &t, n - 1, caps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::q_ungraded;
    use crate::graphs::Graph;
    use num_rational::BigRational;

    type Q = BigRational;

    #[test]
    fn surjection_counts() {
        assert_eq!(surjections(2, 1, 6).unwrap().len(), 1);
        assert_eq!(surjections(3, 2, 6).unwrap().len(), 6);
        assert!(surjections(2, 3, 6).unwrap().is_empty());
        assert!(matches!(surjections(7, 2, 6), Err(LodayError::SurjectionCap { .. })));
    }

    #[test]
    fn surjection_validation() {
        assert!(Surjection::new(2, vec![1, 1]).is_err());
        assert!(Surjection::new(2, vec![1, 3]).is_err());
        assert!(Surjection::new(1, vec![]).is_err());
    }

    #[test]
    fn composition_examples() {
        let s = Surjection::new(2, vec![1, 1, 2]).unwrap();
        let t = Surjection::new(1, vec![1, 1]).unwrap();
        assert_eq!(surj_compose(&Surjection::identity(2), &s).unwrap(), s);
        assert_eq!(surj_compose(&s, &Surjection::identity(3)).unwrap(), s);
        assert_eq!(surj_compose(&t, &s).unwrap().images(), &[1, 1, 1]);
        assert!(surj_compose(&s, &t).is_err());
    }

    #[test]
    fn loday_examples() {
        let g = Graph::new(["a", "b", "c"], [("a", "b"), ("b", "c")]).unwrap();
        let a = q_ungraded::<Q>(&g);
        let caps = Caps::default();
        let id = loday_matrix(&a, &Surjection::identity(2), &caps).unwrap();
        assert_eq!(id, Matrix::identity(a.dim().pow(2)));
        let mult = loday_matrix(&a, &Surjection::new(1, vec![1, 1]).unwrap(), &caps).unwrap();
        let d = a.dim();
        for x in 0..d {
            for y in 0..d {
                assert_eq!(mult.column(x * d + y), a.product(x, y));
            }
        }
        let triple = loday_matrix(&a, &Surjection::new(1, vec![1, 1, 1]).unwrap(), &caps).unwrap();
        assert!(triple.is_zero());
    }

    #[test]
    fn functor_r1_trivial() {
        let g = Graph::new(["a", "b"], [("a", "b")]).unwrap();
        let check = functor_check(&q_ungraded::<Q>(&g), 1, &Caps::default()).unwrap();
        assert!(check.passed());
        assert_eq!(check.checked, 2);
    }

    #[test]
    fn identity_transformation() {
        let algs = CrownAlgebras::<Q>::new(Crowns::new(2).unwrap());
        let one = MonoidAlgElem::one(2);
        let caps = Caps::default();
        for target in [Target::Strip, Target::Crown] {
            let eta = cofunctor_eval(&algs, 1, &one, Sign::Plus, Sign::Plus, target, &caps).unwrap();
            assert!(eta.is_identity());
            assert!(naturality_check(&eta, &caps).unwrap().passed());
        }
        let t = build_t::<Q>(2).unwrap();
        assert!(matches!(
            cofunctor_eval(&algs, 1, &t, Sign::Plus, Sign::Plus, Target::Crown, &caps),
            Err(LodayError::HomSet { .. })
        ));
    }

    #[test]
    fn corrupted_transformation_is_not_natural() {
        let algs = CrownAlgebras::<Q>::new(Crowns::new(2).unwrap());
        let caps = Caps::default();
        let t = build_t::<Q>(2).unwrap();
        let eta = cofunctor_eval(&algs, 2, &t, Sign::Minus, Sign::Plus, Target::Crown, &caps).unwrap();
        assert!(naturality_check(&eta, &caps).unwrap().passed());
        let mut bad = eta.clone();
        // Degree-1 columns are never hit by a product, so corrupt an edge column.
        let m = &mut bad.components_mut()[0];
        let bump = Matrix::from_triplets(m.rows(), m.cols(), [(0, m.cols() - 1, Q::from_i64(1))]).unwrap();
        *m = m.add(&bump).unwrap();
        let check = naturality_check(&bad, &caps).unwrap();
        assert!(!check.passed());
    }

    #[test]
    fn json_shape() {
        let algs = CrownAlgebras::<Q>::new(Crowns::new(2).unwrap());
        let eta = NatTransData::identity(algs.plus.clone(), 1);
        let j = eta.to_json();
        assert_eq!(j["r"], 1);
        assert_eq!(j["dims"], json!([36, 36]));
        assert_eq!(j["components"][0].as_array().unwrap().len(), 36);
        assert_eq!(j["components"][0][0], json!([0, 0, "1"]));
    }
}
