//! The non-abelian tensor square `L ⊗ L` with `L` acting on itself by the
//! bracket, `ᵃb = [a, b]`.
//!
//! `L ⊗ L` is spanned by the symbols `x ⊗ y`, so it is realized as a
//! quotient of the standard tensor space `Q^{n²}` (basis `e_i ⊗ e_j` at
//! 0-based index `i·n + j`) by a relation subspace `W∞`:
//!
//! * for all basis triples `(x, y, z)`
//!   - `[x,y]⊗z − x⊗[y,z] + y⊗[x,z]`
//!   - `x⊗[y,z] − [z,x]⊗y + [y,x]⊗z`
//! * for all `a, b, c` in a basis of `κ(L ⊗ L) = L²`, the relations that make
//!   `[s ⊗ t, s' ⊗ t'] = [s,t] ⊗ [s',t']` alternating and Jacobi:
//!   - `a⊗b + b⊗a`
//!   - `[a,b]⊗c + [b,c]⊗a + [c,a]⊗b`
//!
//! The second family is recomputed until `W∞` stops growing. The commutator
//! map `κ(x ⊗ y) = [x, y]` kills every relation, so the bracket is well
//! defined on the quotient.

use crate::error::{Error, Result};
use crate::liealg::LieAlgebra;
use crate::linalg::{is_zero_vector, unit_vector, zero_vector, Matrix, Scalar, Subspace, Vector};

/// Index of `e_i ⊗ e_j` in the `n²`-dimensional ambient space (0-based).
pub fn tensor_index(n: usize, i: usize, j: usize) -> usize {
    i * n + j
}

/// `x ⊗ y` in ambient coordinates.
pub fn pure_tensor(x: &[Scalar], y: &[Scalar]) -> Vector {
    let n = x.len();
    debug_assert_eq!(n, y.len());
    let mut out = zero_vector(n * n);
    for (i, a) in x.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        for (j, b) in y.iter().enumerate() {
            if !b.is_zero() {
                out[tensor_index(n, i, j)] = a * b;
            }
        }
    }
    out
}

fn combine(terms: &[(i64, &Vector)]) -> Vector {
    let len = terms.first().map_or(0, |(_, v)| v.len());
    let mut out = zero_vector(len);
    for (sign, v) in terms {
        let s = Scalar::from_int(*sign);
        for (o, x) in out.iter_mut().zip(v.iter()) {
            o.add_mul(&s, x);
        }
    }
    out
}

/// The commutator map `κ : Q^{n²} → L`, `e_i ⊗ e_j ↦ [e_i, e_j]`.
fn ambient_kappa(l: &LieAlgebra) -> Matrix {
    let n = l.dim();
    let mut k = Matrix::zeros(n, n * n);
    for (i, j, v) in l.nonzero_brackets() {
        for (r, c) in v.iter().enumerate() {
            if !c.is_zero() {
                k.set(r, tensor_index(n, i, j), c.clone());
                k.set(r, tensor_index(n, j, i), -c);
            }
        }
    }
    k
}

/// The subspace of `Q^{n²}` spanned by the two bracket-action families over
/// all basis triples.
pub fn defining_relations(l: &LieAlgebra) -> Subspace {
    let n = l.dim();
    let e: Vec<Vector> = (0..n).map(|i| unit_vector(n, i)).collect();
    let mut rels = Vec::new();
    for x in 0..n {
        for y in 0..n {
            let xy = l.bracket_basis(x, y);
            let yx = l.bracket_basis(y, x);
            for z in 0..n {
                let yz = l.bracket_basis(y, z);
                let xz = l.bracket_basis(x, z);
                let zx = l.bracket_basis(z, x);
                // [x,y]⊗z − x⊗[y,z] + y⊗[x,z]
                let r1 = combine(&[
                    (1, &pure_tensor(&xy, &e[z])),
                    (-1, &pure_tensor(&e[x], &yz)),
                    (1, &pure_tensor(&e[y], &xz)),
                ]);
                // x⊗[y,z] − [z,x]⊗y + [y,x]⊗z
                let r2 = combine(&[
                    (1, &pure_tensor(&e[x], &yz)),
                    (-1, &pure_tensor(&zx, &e[y])),
                    (1, &pure_tensor(&yx, &e[z])),
                ]);
                rels.extend([r1, r2].into_iter().filter(|r| !is_zero_vector(r)));
            }
        }
    }
    Subspace::span(n * n, rels).expect("relations live in the n² ambient")
}

/// Enlarges `relations` until the bracket `[s, t] = κ(s) ⊗ κ(t)` is
/// alternating and satisfies Jacobi on the quotient.
pub fn bracket_consistency_relations(l: &LieAlgebra, relations: &Subspace) -> Result<Subspace> {
    let n = l.dim();
    if relations.ambient_dim() != n * n {
        return Err(Error::DimensionMismatch {
            expected: n * n,
            found: relations.ambient_dim(),
        });
    }
    let kappa = ambient_kappa(l);
    let mut current = relations.clone();
    loop {
        // Images of the current quotient generators under κ.
        let images = Subspace::span(
            n,
            current.free_columns().into_iter().map(|c| kappa.column(c)),
        )?;
        let gens: Vec<Vector> = images.basis_vectors().collect();
        let mut extra = Vec::new();
        for a in &gens {
            for b in &gens {
                extra.push(combine(&[(1, &pure_tensor(a, b)), (1, &pure_tensor(b, a))]));
                let ab = l.bracket_unchecked(a, b);
                for c in &gens {
                    let bc = l.bracket_unchecked(b, c);
                    let ca = l.bracket_unchecked(c, a);
                    extra.push(combine(&[
                        (1, &pure_tensor(&ab, c)),
                        (1, &pure_tensor(&bc, a)),
                        (1, &pure_tensor(&ca, b)),
                    ]));
                }
            }
        }
        let grown = current.sum(&Subspace::span(n * n, extra)?)?;
        if grown.dim() == current.dim() {
            return Ok(grown);
        }
        current = grown;
    }
}

/// `L ⊗ L` as an explicit finite-dimensional Lie algebra.
#[derive(Clone, Debug)]
pub struct TensorSquare {
    source: LieAlgebra,
    relations: Subspace,
    /// Ambient indices whose classes form the quotient basis.
    quotient_basis: Vec<usize>,
    kappa: Matrix,
    bracket_table: Vec<Vec<Vector>>,
    square_submodule: Subspace,
}

impl TensorSquare {
    /// Builds `L ⊗ L` and verifies every structural invariant; any failure
    /// is reported as [`Error::Inconsistency`].
    pub fn build(l: &LieAlgebra) -> Result<Self> {
        l.require_nilpotent()?;
        let n = l.dim();
        let relations = bracket_consistency_relations(l, &defining_relations(l))?;
        let quotient_basis = relations.free_columns();
        let ambient_kappa = ambient_kappa(l);

        for w in relations.basis_vectors() {
            if !is_zero_vector(&ambient_kappa.mul_vec(&w)?) {
                return Err(Error::Inconsistency(
                    "commutator map does not vanish on the relations".into(),
                ));
            }
        }

        let q = quotient_basis.len();
        let mut kappa = Matrix::zeros(n, q);
        for (t, &c) in quotient_basis.iter().enumerate() {
            for r in 0..n {
                let v = ambient_kappa.get(r, c);
                if !v.is_zero() {
                    kappa.set(r, t, v.clone());
                }
            }
        }

        let mut ts = TensorSquare {
            source: l.clone(),
            relations,
            quotient_basis,
            kappa,
            bracket_table: Vec::new(),
            square_submodule: Subspace::zero(q),
        };

        let images: Vec<Vector> = (0..q).map(|t| ts.kappa.column(t)).collect();
        ts.bracket_table = images
            .iter()
            .map(|a| {
                images
                    .iter()
                    .map(|b| {
                        if is_zero_vector(a) || is_zero_vector(b) {
                            zero_vector(q)
                        } else {
                            ts.project(&pure_tensor(a, b))
                        }
                    })
                    .collect()
            })
            .collect();

        let e = |i| unit_vector(n, i);
        let symmetric = (0..n).flat_map(|i| (i..n).map(move |j| (i, j)));
        let sq: Vec<Vector> = symmetric
            .map(|(i, j)| {
                let v = combine(&[
                    (1, &pure_tensor(&e(i), &e(j))),
                    (1, &pure_tensor(&e(j), &e(i))),
                ]);
                ts.project(&v)
            })
            .collect();
        ts.square_submodule = Subspace::span(q, sq)?;

        ts.verify()?;
        Ok(ts)
    }

    fn verify(&self) -> Result<()> {
        let fail = |what: &str| {
            Err(Error::Inconsistency(format!(
                "{what} for the tensor square of {}",
                self.source.name()
            )))
        };
        let q = self.quotient_dim();
        let n = self.source.dim();
        if q + self.relations.dim() != n * n {
            return fail("quotient dimension does not complement the relations");
        }
        for a in 0..q {
            if !is_zero_vector(&self.bracket_table[a][a]) {
                return fail("bracket is not alternating");
            }
            for b in a + 1..q {
                let ab = &self.bracket_table[a][b];
                let ba = &self.bracket_table[b][a];
                if ab.iter().zip(ba).any(|(x, y)| !(x + y).is_zero()) {
                    return fail("bracket is not antisymmetric");
                }
            }
        }
        for a in 0..q {
            for b in a + 1..q {
                for c in b + 1..q {
                    let mut sum = self.bracket_with_basis(&self.bracket_table[a][b], c);
                    let bc = self.bracket_with_basis(&self.bracket_table[b][c], a);
                    let ca = self.bracket_with_basis(&self.bracket_table[c][a], b);
                    for ((s, x), y) in sum.iter_mut().zip(&bc).zip(&ca) {
                        *s += x;
                        *s += y;
                    }
                    if !is_zero_vector(&sum) {
                        return fail("bracket violates Jacobi");
                    }
                }
            }
        }
        for s in self.square_submodule.basis_vectors() {
            for c in 0..q {
                if !is_zero_vector(&self.bracket_with_basis(&s, c)) {
                    return fail("square submodule is not central");
                }
            }
            if !is_zero_vector(&self.kappa.mul_vec(&s)?) {
                return fail("commutator map does not vanish on the square submodule");
            }
        }
        let image = Subspace::row_space(&self.kappa.transpose());
        if &image != self.source.derived_subalgebra().space() {
            return fail("commutator map is not onto the derived subalgebra");
        }
        Ok(())
    }

    /// `[u, e_c]` for a quotient vector `u` and quotient basis index `c`.
    fn bracket_with_basis(&self, u: &[Scalar], c: usize) -> Vector {
        let q = self.quotient_dim();
        let mut out = zero_vector(q);
        for (i, x) in u.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (o, y) in out.iter_mut().zip(&self.bracket_table[i][c]) {
                o.add_mul(x, y);
            }
        }
        out
    }

    /// Quotient coordinates of the class of an ambient vector.
    pub fn project(&self, v: &[Scalar]) -> Vector {
        let r = self
            .relations
            .reduce(v)
            .expect("ambient vector of length n²");
        self.quotient_basis.iter().map(|&c| r[c].clone()).collect()
    }

    /// Quotient coordinates of `x ⊗ y` for `x, y ∈ L`.
    pub fn class_of(&self, x: &[Scalar], y: &[Scalar]) -> Result<Vector> {
        let n = self.source.dim();
        for v in [x, y] {
            if v.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: v.len(),
                });
            }
        }
        Ok(self.project(&pure_tensor(x, y)))
    }

    /// Lie bracket of two quotient vectors.
    pub fn bracket(&self, u: &[Scalar], v: &[Scalar]) -> Result<Vector> {
        let q = self.quotient_dim();
        for w in [u, v] {
            if w.len() != q {
                return Err(Error::DimensionMismatch {
                    expected: q,
                    found: w.len(),
                });
            }
        }
        let mut out = zero_vector(q);
        for (c, y) in v.iter().enumerate() {
            if y.is_zero() {
                continue;
            }
            for (o, z) in out.iter_mut().zip(self.bracket_with_basis(u, c)) {
                o.add_mul(y, &z);
            }
        }
        Ok(out)
    }

    pub fn source(&self) -> &LieAlgebra {
        &self.source
    }

    pub fn ambient_dim(&self) -> usize {
        self.source.dim() * self.source.dim()
    }

    /// `W∞`, the relation subspace of the ambient tensor space.
    pub fn relations(&self) -> &Subspace {
        &self.relations
    }

    /// Ambient indices `i·n + j` whose classes form the quotient basis.
    pub fn quotient_basis(&self) -> &[usize] {
        &self.quotient_basis
    }

    /// `dim L ⊗ L`.
    pub fn quotient_dim(&self) -> usize {
        self.quotient_basis.len()
    }

    /// The commutator map `L ⊗ L → L` in quotient coordinates (`n × q`).
    pub fn kappa(&self) -> &Matrix {
        &self.kappa
    }

    /// `[b_a, b_b]` for quotient basis vectors.
    pub fn bracket_table(&self) -> &[Vec<Vector>] {
        &self.bracket_table
    }

    pub fn is_abelian(&self) -> bool {
        self.bracket_table
            .iter()
            .flatten()
            .all(|v| is_zero_vector(v))
    }

    /// `L □ L`, spanned by the classes of `l ⊗ l`.
    pub fn square_submodule(&self) -> &Subspace {
        &self.square_submodule
    }

    /// `dim L ∧ L = dim L ⊗ L − dim L □ L`.
    pub fn exterior_dim(&self) -> usize {
        self.quotient_dim() - self.square_submodule.dim()
    }

    /// Dimension of the kernel of `L ∧ L → L²`.
    pub fn schur_via_exterior(&self) -> usize {
        self.exterior_dim() - self.kappa.rank()
    }
}

pub fn build_tensor_square(l: &LieAlgebra) -> Result<TensorSquare> {
    TensorSquare::build(l)
}

pub fn square_submodule(t: &TensorSquare) -> &Subspace {
    t.square_submodule()
}

pub fn exterior_square_dim(t: &TensorSquare) -> usize {
    t.exterior_dim()
}

pub fn schur_via_exterior(t: &TensorSquare) -> usize {
    t.schur_via_exterior()
}

/// `dim Γ(V) = d(d+1)/2` for a `d`-dimensional abelian `V`.
pub fn gamma_dim(d: usize) -> usize {
    d * (d + 1) / 2
}

/// `dim Γ(L/L²) + dim M(L) + dim L²`, the closed form the construction is
/// checked against.
pub fn tensor_square_dim_formula(l: &LieAlgebra) -> Result<usize> {
    l.require_nilpotent()?;
    let m = l.derived_subalgebra().dim();
    let multiplier = crate::homology::schur_multiplier_dim(l)?;
    Ok(gamma_dim(l.dim() - m) + multiplier + m)
}

/// `dim(M/M²) · dim(N/N²)`: the dimension of a cross term `M ⊗ N` between
/// direct summands acting trivially on each other.
pub fn trivial_action_tensor_dim(a: &LieAlgebra, b: &LieAlgebra) -> usize {
    let ab = |l: &LieAlgebra| l.dim() - l.derived_subalgebra().dim();
    ab(a) * ab(b)
}
