//! The oscillator algebra case: the reference six-parameter family, the
//! three branches with their r-matrices, parameter identifications and the
//! automorphism reductions.

use super::branch::BranchConstraints;
use super::coboundary::{
    delta_from_r, is_ad_invariant, r_from_delta, reduce_coefficients, schouten, wedge2_coordinates,
};
use super::cocycle::{cocycle_residual, solve_cocycle};
use super::family::{classify_family, count_terms, Classification, CocommutatorFamily};
use super::BialgebraError;
use crate::check::Check;
use crate::lie::h4::*;
use crate::lie::{
    h4_algebra, skew_part, Automorphism, Cocommutator, LieAlgebra, Tensor, Wedge2, Wedge3,
};
use crate::math::{int, poly, Poly, PolyMatrix, SolutionSet, Symbol};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BranchKind {
    A,
    B,
    C,
}

impl BranchKind {
    pub const ALL: [BranchKind; 3] = [BranchKind::A, BranchKind::B, BranchKind::C];

    pub fn name(self) -> &'static str {
        match self {
            BranchKind::A => "A",
            BranchKind::B => "B",
            BranchKind::C => "C",
        }
    }

    pub fn constraints(self) -> BranchConstraints {
        let s = |names: &[&str]| names.iter().map(|n| Symbol::new(n)).collect::<Vec<_>>();
        match self {
            BranchKind::A => BranchConstraints {
                zero: s(&["a2", "a3"]),
                nonzero: s(&["a1"]),
            },
            BranchKind::B => BranchConstraints {
                zero: s(&["a1", "a4"]),
                nonzero: s(&["a2"]),
            },
            BranchKind::C => BranchConstraints {
                zero: s(&["a1", "a2"]),
                nonzero: vec![],
            },
        }
    }
}

fn params(names: &[&str]) -> Vec<Symbol> {
    names.iter().map(|n| Symbol::new(n)).collect()
}

/// The general cocycle on the oscillator algebra in the parameters
/// `a1, ..., a6`.
pub fn oscillator_family() -> CocommutatorFamily {
    let mut d = Cocommutator::zero(4);
    let w = |terms: &[(usize, usize, &str)]| {
        let mut w = Wedge2::zero();
        for &(i, j, c) in terms {
            w.add_term(i, j, poly(c));
        }
        w
    };
    d.images[N] = w(&[(N, AP, "a1"), (N, AM, "a2"), (AP, M, "a5"), (AM, M, "a6")]);
    d.images[AP] = w(&[(N, M, "a2"), (AP, AM, "a2"), (AP, M, "a3")]);
    d.images[AM] = w(&[(N, M, "a1"), (AP, AM, "-a1"), (AM, M, "a4")]);
    CocommutatorFamily {
        delta: d,
        params: params(&["a1", "a2", "a3", "a4", "a5", "a6"]),
    }
}

/// The classical r-matrix of each branch.
pub fn oscillator_r_matrix(kind: BranchKind) -> Wedge2 {
    let mut r = Wedge2::zero();
    let half = poly("1/2");
    match kind {
        BranchKind::A => {
            r.add_term(N, AP, poly("a1"));
            r.add_term(N, M, &poly("a4") * &half);
            r.add_term(AP, AM, &poly("-a4") * &half);
        }
        BranchKind::B => {
            r.add_term(N, AM, poly("-a2"));
            r.add_term(N, M, &poly("-a3") * &half);
            r.add_term(AP, AM, &poly("-a3") * &half);
        }
        BranchKind::C => {
            r.add_term(N, M, &poly("a4 - a3") * &half);
            r.add_term(AP, AM, &poly("-a4 - a3") * &half);
        }
    }
    r.add_term(AP, M, poly("a5"));
    r.add_term(AM, M, poly("-a6"));
    r
}

/// The polynomial whose vanishing makes the branch triangular.
pub fn triangularity_polynomial(kind: BranchKind) -> Poly {
    match kind {
        BranchKind::A => poly("4*a1*a6 + a4^2"),
        BranchKind::B => poly("4*a2*a5 + a3^2"),
        BranchKind::C => poly("a3 + a4"),
    }
}

/// The branch parameters written through the coboundary parameters
/// `alpha_p, alpha_m, beta_p, beta_m, vartheta, xi`.
pub fn identification(kind: BranchKind) -> Vec<(Symbol, Poly)> {
    let pairs: &[(&str, &str)] = match kind {
        BranchKind::A => &[("a1", "alpha_p"), ("a4", "2*vartheta"), ("a5", "beta_p"), ("a6", "-beta_m")],
        BranchKind::B => &[("a2", "-alpha_m"), ("a3", "-2*vartheta"), ("a5", "beta_p"), ("a6", "-beta_m")],
        BranchKind::C => &[("a3", "-vartheta - xi"), ("a4", "vartheta - xi"), ("a5", "beta_p"), ("a6", "-beta_m")],
    };
    pairs.iter().map(|(a, b)| (Symbol::new(a), poly(b))).collect()
}

/// `-z (N (x) M + M (x) N) + 2z A- (x) A+`.
pub fn standard_r_tensor() -> Tensor {
    let mut t = Tensor::zero(2);
    t.add_term(vec![N, M], poly("-z"));
    t.add_term(vec![M, N], poly("-z"));
    t.add_term(vec![AM, AP], poly("2*z"));
    t
}

/// `N -> -N, A+ -> A-, A- -> A+, M -> -M`.
pub fn swap_automorphism(alg: &LieAlgebra) -> Result<Automorphism, BialgebraError> {
    let mut imgs = vec![vec![int(0); 4]; 4];
    imgs[N][N] = int(-1);
    imgs[AP][AM] = int(1);
    imgs[AM][AP] = int(1);
    imgs[M][M] = int(-1);
    Ok(Automorphism::from_rational(alg, &imgs)?)
}

/// Rewrites objects in the basis `N' = N - (a5/a1) M` (other generators
/// unchanged).
pub fn shift_automorphism(alg: &LieAlgebra) -> Result<Automorphism, BialgebraError> {
    let a1 = poly("a1");
    let mut basis: Vec<Vec<Poly>> = (0..4)
        .map(|i| (0..4).map(|k| if k == i { a1.clone() } else { Poly::zero() }).collect())
        .collect();
    basis[N][M] = poly("-a5");
    Ok(Automorphism::from_basis_change(alg, &basis, a1.clone(), vec![a1])?)
}

#[derive(Clone, Debug)]
pub struct BranchReport {
    pub kind: BranchKind,
    pub constraints: BranchConstraints,
    pub cocommutator: Cocommutator,
    pub r_matrix: Wedge2,
    pub r_solution: SolutionSet,
    pub schouten: Wedge3,
    pub triangularity: Poly,
    pub quotients: Vec<Poly>,
    /// The r-matrix and triangularity polynomial in coboundary parameters.
    pub r_identified: Wedge2,
    pub triangularity_identified: Poly,
    pub checks: Vec<Check>,
}

#[derive(Clone, Debug)]
pub struct H4Classification {
    pub raw_family: CocommutatorFamily,
    /// `c_k` written in `a1, ..., a6`.
    pub renaming: Vec<(Symbol, Poly)>,
    pub classification: Classification,
    pub branches: Vec<BranchReport>,
    /// Type A parameters of the swapped Type B family.
    pub swap_correspondence: Vec<(Symbol, Poly)>,
    pub shifted_type_a: Cocommutator,
    pub standard_location: Vec<(Symbol, Poly)>,
    pub jordanian_location: Vec<(Symbol, Poly)>,
    pub checks: Vec<Check>,
}

impl H4Classification {
    pub fn all_checks(&self) -> impl Iterator<Item = &Check> {
        self.checks
            .iter()
            .chain(&self.classification.checks)
            .chain(self.classification.branches.iter().flat_map(|b| &b.checks))
            .chain(self.branches.iter().flat_map(|b| &b.checks))
    }
}

pub fn classify_h4() -> Result<H4Classification, BialgebraError> {
    let alg = h4_algebra();
    let reference = oscillator_family();
    let mut checks = Vec::new();

    let raw = solve_cocycle(&alg)?;
    checks.push(Check::new(
        "cocycle_dimension",
        raw.params.len() == 6,
        format!("kernel dimension {}", raw.params.len()),
    ));
    let renaming_values = raw.renaming_to(&reference)?;
    let renaming: Vec<(Symbol, Poly)> = raw.params.iter().cloned().zip(renaming_values.clone()).collect();
    let jac = PolyMatrix::from_fn(renaming.len(), reference.params.len(), |i, j| {
        renaming[i].1.derivative(&reference.params[j])
    });
    let invertible = jac.det().is_ok_and(|d| d.is_constant() && !d.is_zero());
    let matches = raw.substitute(&renaming_values) == reference.delta;
    checks.push(Check::new(
        "renaming_matches_reference",
        invertible && matches,
        format!("invertible linear renaming: {invertible}; coefficient-for-coefficient match: {matches}"),
    ));

    let classification = classify_family(&alg, reference.clone())?;
    let mut ideal: Vec<Poly> = classification.ideal.iter().map(Poly::monic).collect();
    ideal.sort_by_key(|p| p.to_string());
    let expected = [poly("a1*a2"), poly("a1*a3"), poly("a2*a4")];
    checks.push(Check::new(
        "cojacobi_ideal",
        ideal == expected,
        format!("generators {}", join(&ideal)),
    ));
    let patterns: Vec<BranchConstraints> = BranchKind::ALL.iter().map(|k| k.constraints()).collect();
    let found: Vec<BranchConstraints> = classification.branches.iter().map(|b| b.constraints.clone()).collect();
    checks.push(Check::new(
        "branch_patterns",
        found == patterns,
        found.iter().map(ToString::to_string).collect::<Vec<_>>().join("; "),
    ));
    let all_coboundary = classification.branches.iter().all(|b| b.is_coboundary());
    checks.push(Check::new(
        "all_branches_coboundary",
        all_coboundary && classification.branches.len() == 3,
        format!("{} branches", classification.branches.len()),
    ));

    let mut branches = Vec::new();
    for kind in BranchKind::ALL {
        branches.push(branch_report(&alg, &reference, kind)?);
    }

    // Jordanian r-matrix is triangular.
    let jordan_r = Wedge2::term(N, AP, poly("z"));
    checks.push(Check::new(
        "jordanian_schouten_zero",
        schouten(&alg, &jordan_r)?.is_zero(),
        "[[z N^A+, z N^A+]]",
    ));

    // The shift N' = N - (a5/a1) M removes a5 from Type A.
    let type_a = reference.restrict(&BranchKind::A.constraints());
    let shifted = shift_automorphism(&alg)?.apply_cocommutator(&type_a);
    let a5_free = reference.substitute(&values_with(&reference, &[("a2", "0"), ("a3", "0"), ("a5", "0")]));
    checks.push(Check::new(
        "shift_eliminates_a5",
        shifted.is_polynomial() && shifted.numerator == a5_free,
        format!("denominator {}", shifted.denominator),
    ));

    // The swap carries Type B into Type A.
    let type_b = reference.restrict(&BranchKind::B.constraints());
    let swapped = swap_automorphism(&alg)?.apply_cocommutator(&type_b);
    let (swap_correspondence, swap_ok) = if swapped.is_polynomial() {
        match reference.locate(&swapped.numerator) {
            Ok(vals) => {
                let in_a = BranchKind::A.constraints().zero.iter().all(|s| value_of(&reference, &vals, s).is_zero());
                (reference.params.iter().cloned().zip(vals).collect(), in_a)
            }
            Err(_) => (Vec::new(), false),
        }
    } else {
        (Vec::new(), false)
    };
    checks.push(Check::new(
        "swap_maps_b_into_a",
        swap_ok,
        format!("induced parameters {}", fmt_pairs(&swap_correspondence)),
    ));

    // The standard bialgebra sits in Type C, the Jordanian one in Type A.
    let r_std = skew_part(&standard_r_tensor())?;
    let expected_std = Wedge2::term(AM, AP, poly("z"));
    let pd = delta_from_r(&alg, &r_std)?;
    let standard_location = locate_named(&reference, &pd)?;
    let std_vals: Vec<Poly> = standard_location.iter().map(|(_, p)| p.clone()).collect();
    let std_in_c = in_branch(&reference, &std_vals, BranchKind::C);
    let std_r_c = substitute_wedge(&oscillator_r_matrix(BranchKind::C), &standard_location);
    checks.push(Check::new(
        "standard_is_type_c",
        r_std == expected_std && std_in_c && std_r_c == r_std,
        format!("skew part {}; parameters {}", r_std.fmt_with(alg.names()), fmt_pairs(&standard_location)),
    ));
    let eb = delta_from_r(&alg, &jordan_r)?;
    let jordanian_location = locate_named(&reference, &eb)?;
    let jv: Vec<Poly> = jordanian_location.iter().map(|(_, p)| p.clone()).collect();
    let jr_a = substitute_wedge(&oscillator_r_matrix(BranchKind::A), &jordanian_location);
    checks.push(Check::new(
        "jordanian_is_type_a",
        in_branch(&reference, &jv, BranchKind::A) && jr_a == jordan_r,
        format!("parameters {}", fmt_pairs(&jordanian_location)),
    ));

    Ok(H4Classification {
        raw_family: raw,
        renaming,
        classification,
        branches,
        swap_correspondence,
        shifted_type_a: shifted.numerator,
        standard_location,
        jordanian_location,
        checks,
    })
}

fn branch_report(
    alg: &LieAlgebra,
    reference: &CocommutatorFamily,
    kind: BranchKind,
) -> Result<BranchReport, BialgebraError> {
    let name = kind.name();
    let constraints = kind.constraints();
    let delta = reference.restrict(&constraints);
    let r = oscillator_r_matrix(kind);
    let mut checks = Vec::new();

    checks.push(Check::residual(
        format!("type_{name}_cocycle"),
        count_terms(&cocycle_residual(alg, &delta)?),
        "restricted family",
    ));
    let from_r = delta_from_r(alg, &r)?;
    checks.push(Check::new(
        format!("type_{name}_r_reproduces_family"),
        from_r == delta,
        "delta_from_r(r) against the restricted family",
    ));
    let sol = r_from_delta(alg, &delta)?;
    checks.push(Check::new(
        format!("type_{name}_r_in_solution_set"),
        sol.contains(&wedge2_coordinates(&r, 4)),
        format!("solution dimension {}, assumptions [{}]", sol.dimension(), join(&sol.assumptions)),
    ));
    let vanishing: Vec<&str> = match kind {
        BranchKind::A => vec!["M", "A+"],
        BranchKind::B => vec!["M", "A-"],
        BranchKind::C => vec!["M"],
    };
    let vanish_ok = vanishing
        .iter()
        .all(|g| delta.images[alg.index_of(g).expect("h4 name")].is_zero());
    checks.push(Check::new(
        format!("type_{name}_vanishing_images"),
        vanish_ok,
        format!("delta vanishes on {}", vanishing.join(", ")),
    ));

    let s = schouten(alg, &r)?;
    checks.push(Check::new(
        format!("type_{name}_schouten_ad_invariant"),
        is_ad_invariant(alg, &s.to_tensor())?,
        "[[r,r]] annihilated by every generator",
    ));
    let triangularity = triangularity_polynomial(kind);
    let quotients = match reduce_coefficients(&s, &triangularity) {
        Ok(q) => {
            checks.push(Check::pass(
                format!("type_{name}_triangularity"),
                format!("{} coefficients of [[r,r]] are multiples of {triangularity}", q.len()),
            ));
            q
        }
        Err(BialgebraError::ReductionFailure { coefficient, divisor }) => {
            checks.push(Check::fail(
                format!("type_{name}_triangularity"),
                format!("{coefficient} is not a multiple of {divisor}"),
            ));
            Vec::new()
        }
        Err(e) => return Err(e),
    };

    let ident = identification(kind);
    let jac = PolyMatrix::from_fn(ident.len(), ident.len(), |i, j| {
        let vars = ident_vars(kind);
        ident[i].1.derivative(&vars[j])
    });
    let det_ok = jac.det().is_ok_and(|d| d.is_constant() && !d.is_zero());
    let r_identified = substitute_wedge(&r, &ident);
    let triangularity_identified = triangularity.substitute_all(&ident);
    let delta_identified = delta.map_coeffs(|c| c.substitute_all(&ident));
    let consistent = delta_from_r(alg, &r_identified)? == delta_identified;
    checks.push(Check::new(
        format!("type_{name}_identification"),
        det_ok && consistent,
        format!(
            "r = {}; triangular iff {} = 0",
            r_identified.fmt_with(alg.names()),
            triangularity_identified
        ),
    ));

    Ok(BranchReport {
        kind,
        constraints,
        cocommutator: delta,
        r_matrix: r,
        r_solution: sol,
        schouten: s,
        triangularity,
        quotients,
        r_identified,
        triangularity_identified,
        checks,
    })
}

fn ident_vars(kind: BranchKind) -> Vec<Symbol> {
    match kind {
        BranchKind::A => params(&["alpha_p", "vartheta", "beta_p", "beta_m"]),
        BranchKind::B => params(&["alpha_m", "vartheta", "beta_p", "beta_m"]),
        BranchKind::C => params(&["vartheta", "xi", "beta_p", "beta_m"]),
    }
}

fn values_with(fam: &CocommutatorFamily, fixed: &[(&str, &str)]) -> Vec<Poly> {
    fam.params
        .iter()
        .map(|p| {
            fixed
                .iter()
                .find(|(n, _)| *n == p.name())
                .map_or_else(|| Poly::symbol(p), |(_, v)| poly(v))
        })
        .collect()
}

fn value_of<'a>(fam: &CocommutatorFamily, vals: &'a [Poly], s: &Symbol) -> &'a Poly {
    let k = fam.params.iter().position(|p| p == s).expect("family parameter");
    &vals[k]
}

fn in_branch(fam: &CocommutatorFamily, vals: &[Poly], kind: BranchKind) -> bool {
    kind.constraints()
        .contains(|s| value_of(fam, vals, s).is_zero())
}

fn locate_named(fam: &CocommutatorFamily, d: &Cocommutator) -> Result<Vec<(Symbol, Poly)>, BialgebraError> {
    Ok(fam.params.iter().cloned().zip(fam.locate(d)?).collect())
}

fn substitute_wedge(w: &Wedge2, subs: &[(Symbol, Poly)]) -> Wedge2 {
    w.map_coeffs(|c| c.substitute_all(subs))
}

fn join(ps: &[Poly]) -> String {
    ps.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
}

fn fmt_pairs(pairs: &[(Symbol, Poly)]) -> String {
    pairs
        .iter()
        .map(|(s, p)| format!("{} = {p}", s.name()))
        .collect::<Vec<_>>()
        .join(", ")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classification_passes_every_check() {
        let c = classify_h4().unwrap();
        for k in c.all_checks() {
            assert!(k.passed, "{}: {}", k.name, k.detail);
        }
    }

    #[test]
    fn swap_parameter_correspondence() {
        let c = classify_h4().unwrap();
        let got: Vec<String> = c.swap_correspondence.iter().map(|(s, p)| format!("{}={p}", s.name())).collect();
        assert_eq!(got, ["a1=a2", "a2=0", "a3=0", "a4=-a3", "a5=a6", "a6=a5"]);
    }

    #[test]
    fn identified_r_matrices_have_clean_forms() {
        let names: Vec<String> = ["N", "A+", "A-", "M"].map(String::from).to_vec();
        let f = |k| oscillator_r_matrix(k).map_coeffs(|c| c.substitute_all(&identification(k)));
        let mut a = Wedge2::term(N, AP, poly("alpha_p"));
        a.add_term(N, M, poly("vartheta"));
        a.add_term(AP, AM, poly("-vartheta"));
        a.add_term(AP, M, poly("beta_p"));
        a.add_term(AM, M, poly("beta_m"));
        assert_eq!(f(BranchKind::A), a, "{}", f(BranchKind::A).fmt_with(&names));
        let mut b = Wedge2::term(N, AM, poly("alpha_m"));
        b.add_term(N, M, poly("vartheta"));
        b.add_term(AP, AM, poly("vartheta"));
        b.add_term(AP, M, poly("beta_p"));
        b.add_term(AM, M, poly("beta_m"));
        assert_eq!(f(BranchKind::B), b);
        let mut c = Wedge2::term(N, M, poly("vartheta"));
        c.add_term(AP, AM, poly("xi"));
        c.add_term(AP, M, poly("beta_p"));
        c.add_term(AM, M, poly("beta_m"));
        assert_eq!(f(BranchKind::C), c);
        assert_eq!(
            triangularity_polynomial(BranchKind::C).substitute_all(&identification(BranchKind::C)),
            poly("-2*xi")
        );
    }

    #[test]
    fn locations_of_standard_and_jordanian() {
        let c = classify_h4().unwrap();
        let vals = |v: &[(Symbol, Poly)]| v.iter().map(|(_, p)| p.to_string()).collect::<Vec<_>>();
        assert_eq!(vals(&c.standard_location), ["0", "0", "z", "z", "0", "0"]);
        assert_eq!(vals(&c.jordanian_location), ["z", "0", "0", "0", "0", "0"]);
    }
}
