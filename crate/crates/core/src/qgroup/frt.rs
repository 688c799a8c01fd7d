use super::coord::{QCoordAlgebra, QElem, QGen, QMono, QTensor};
use crate::check::Labeled;
use crate::math::{Poly, PolyMatrix};

/// A square matrix with coordinate-algebra entries.
pub type QMatrix = Vec<Vec<QElem>>;

/// `T = [[1, a- E, m + a- a+], [0, E, a+], [0, 0, 1]]` with hatted entries.
pub fn quantum_t(alg: &QCoordAlgebra) -> QMatrix {
    let g = QElem::gen;
    let mut t = vec![vec![QElem::zero(); 3]; 3];
    t[0][0] = QElem::one();
    t[0][1] = alg.word(&[QGen::Am, QGen::E]);
    t[0][2] = g(QGen::M).add(&alg.word(&[QGen::Am, QGen::Ap]));
    t[1][1] = g(QGen::E);
    t[1][2] = g(QGen::Ap);
    t[2][2] = QElem::one();
    t
}

fn scalar_matrix(m: &PolyMatrix) -> QMatrix {
    (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| QElem::scalar(m.get(i, j).clone())).collect())
        .collect()
}

fn mat_mul(alg: &QCoordAlgebra, a: &QMatrix, b: &QMatrix) -> QMatrix {
    let n = a.len();
    let k = b.len();
    let m = b[0].len();
    let mut out = vec![vec![QElem::zero(); m]; n];
    for i in 0..n {
        for j in 0..m {
            for l in 0..k {
                if a[i][l].is_zero() || b[l][j].is_zero() {
                    continue;
                }
                out[i][j] = out[i][j].add(&alg.mul(&a[i][l], &b[l][j]));
            }
        }
    }
    out
}

/// `T ⊗ I` and `I ⊗ T` on `V ⊗ V`, row index `3i + k`.
fn t_embeddings(t: &QMatrix) -> (QMatrix, QMatrix) {
    let d = t.len();
    let mut t1 = vec![vec![QElem::zero(); d * d]; d * d];
    let mut t2 = t1.clone();
    for i in 0..d {
        for k in 0..d {
            for j in 0..d {
                for l in 0..d {
                    if k == l {
                        t1[i * d + k][j * d + l] = t[i][j].clone();
                    }
                    if i == j {
                        t2[i * d + k][j * d + l] = t[k][l].clone();
                    }
                }
            }
        }
    }
    (t1, t2)
}

/// The 81 entries of `R T1 T2 - T2 T1 R`.
pub fn rtt_residual(alg: &QCoordAlgebra, r: &PolyMatrix) -> Vec<Labeled<QElem>> {
    let t = quantum_t(alg);
    let (t1, t2) = t_embeddings(&t);
    let rq = scalar_matrix(r);
    let lhs = mat_mul(alg, &rq, &mat_mul(alg, &t1, &t2));
    let rhs = mat_mul(alg, &mat_mul(alg, &t2, &t1), &rq);
    let d = t.len();
    let mut out = Vec::new();
    for a in 0..d * d {
        for b in 0..d * d {
            out.push(Labeled::new(
                format!("({},{}),({},{})", a / d + 1, a % d + 1, b / d + 1, b % d + 1),
                lhs[a][b].sub(&rhs[a][b]),
            ));
        }
    }
    out
}

/// The coordinate coproduct on letters, extended multiplicatively.
#[derive(Clone, Debug)]
pub struct QCoproduct {
    images: Vec<(QGen, QTensor)>,
}

impl QCoproduct {
    /// `ΔE = E⊗E`, `Δa+ = E⊗a+ + a+⊗1`, `Δa- = E^-1⊗a- + a-⊗1`,
    /// `Δm = 1⊗m + m⊗1 - E^-1 a+⊗a-`.
    pub fn standard(alg: &QCoordAlgebra) -> QCoproduct {
        let g = QElem::gen;
        let one = QElem::one();
        let t = |a: &QElem, b: &QElem| QTensor::from_slots(&[a.clone(), b.clone()]);
        let images = vec![
            (QGen::E, t(&g(QGen::E), &g(QGen::E))),
            (QGen::EInv, t(&g(QGen::EInv), &g(QGen::EInv))),
            (QGen::Ap, t(&g(QGen::E), &g(QGen::Ap)).add(&t(&g(QGen::Ap), &one))),
            (QGen::Am, t(&g(QGen::EInv), &g(QGen::Am)).add(&t(&g(QGen::Am), &one))),
            (
                QGen::M,
                t(&one, &g(QGen::M))
                    .add(&t(&g(QGen::M), &one))
                    .sub(&t(&alg.word(&[QGen::EInv, QGen::Ap]), &g(QGen::Am))),
            ),
        ];
        QCoproduct { images }
    }

    pub fn image(&self, g: QGen) -> &QTensor {
        &self.images.iter().find(|(h, _)| *h == g).expect("every letter has an image").1
    }

    pub fn apply_mono(&self, alg: &QCoordAlgebra, m: &QMono) -> QTensor {
        let mut acc = QTensor::one(2);
        let e = if m.e >= 0 { QGen::E } else { QGen::EInv };
        let letters = std::iter::repeat_n(QGen::M, m.m as usize)
            .chain(std::iter::repeat_n(QGen::Am, m.am as usize))
            .chain(std::iter::repeat_n(QGen::Ap, m.ap as usize))
            .chain(std::iter::repeat_n(e, m.e.unsigned_abs() as usize));
        for g in letters {
            acc = alg.tensor_mul(&acc, self.image(g));
        }
        acc
    }

    pub fn apply(&self, alg: &QCoordAlgebra, x: &QElem) -> QTensor {
        let mut out = QTensor::zero();
        for (m, c) in x.terms() {
            out = out.add(&self.apply_mono(alg, m).scale(c));
        }
        out
    }
}

/// `ε(m^a a-^b a+^c E^d) = [a = b = c = 0]`.
pub fn counit_mono(m: &QMono) -> Poly {
    if m.m == 0 && m.am == 0 && m.ap == 0 {
        Poly::one()
    } else {
        Poly::zero()
    }
}

pub fn counit(x: &QElem) -> Poly {
    let mut out = Poly::zero();
    for (m, c) in x.terms() {
        out += &(c * &counit_mono(m));
    }
    out
}

fn counit_slot(t: &QTensor, slot: usize) -> QElem {
    let mut out = QElem::zero();
    for (k, c) in t.terms() {
        out.add_term(k[1 - slot], c * &counit_mono(&k[slot]));
    }
    out
}

fn pair_label(x: QGen, y: QGen) -> String {
    format!("{} {}", x.name(), y.name())
}

/// `Δ(x)Δ(y) - Δ(xy)` for every ordered pair of letters, where `xy` is
/// first brought to normal form; zero iff Δ respects every relation.
pub fn coproduct_relation_residuals(alg: &QCoordAlgebra, cop: &QCoproduct) -> Vec<Labeled<QTensor>> {
    let mut out = Vec::new();
    for x in QGen::ALL {
        for y in QGen::ALL {
            let lhs = alg.tensor_mul(cop.image(x), cop.image(y));
            let rhs = cop.apply(alg, &alg.word(&[x, y]));
            out.push(Labeled::new(pair_label(x, y), lhs.sub(&rhs)));
        }
    }
    out
}

pub fn coproduct_coassociativity(alg: &QCoordAlgebra, cop: &QCoproduct) -> Vec<Labeled<QTensor>> {
    QGen::ALL
        .iter()
        .map(|&g| {
            let d = cop.image(g);
            let left = d.map_slot(0, |m| cop.apply_mono(alg, m));
            let right = d.map_slot(1, |m| cop.apply_mono(alg, m));
            Labeled::new(g.name(), left.sub(&right))
        })
        .collect()
}

/// Both counit axioms per letter, and `ε(x)ε(y) = ε(xy)` per pair.
pub fn counit_residuals(alg: &QCoordAlgebra, cop: &QCoproduct) -> Vec<Labeled<QElem>> {
    let mut out = Vec::new();
    for g in QGen::ALL {
        let d = cop.image(g);
        let x = QElem::gen(g);
        out.push(Labeled::new(format!("(ε⊗id)Δ {}", g.name()), counit_slot(d, 0).sub(&x)));
        out.push(Labeled::new(format!("(id⊗ε)Δ {}", g.name()), counit_slot(d, 1).sub(&x)));
    }
    for x in QGen::ALL {
        for y in QGen::ALL {
            let e = &(&counit(&QElem::gen(x)) * &counit(&QElem::gen(y))) - &counit(&alg.word(&[x, y]));
            out.push(Labeled::new(format!("ε {}", pair_label(x, y)), QElem::scalar(e)));
        }
    }
    out
}

/// `ΔT_ij - sum_k T_ik ⊗ T_kj`.
pub fn matrix_coproduct_residuals(alg: &QCoordAlgebra, cop: &QCoproduct) -> Vec<Labeled<QTensor>> {
    let t = quantum_t(alg);
    let d = t.len();
    let mut out = Vec::new();
    for i in 0..d {
        for j in 0..d {
            let lhs = cop.apply(alg, &t[i][j]);
            let mut rhs = QTensor::zero();
            for (tik, row) in t[i].iter().zip(&t) {
                rhs = rhs.add(&QTensor::from_slots(&[tik.clone(), row[j].clone()]));
            }
            out.push(Labeled::new(format!("T{}{}", i + 1, j + 1), lhs.sub(&rhs)));
        }
    }
    out
}
