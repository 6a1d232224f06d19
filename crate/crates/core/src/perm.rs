//! Symmetric-group machinery: permutations, their unitary representation on
//! the network space, local-permutation enumeration per neighborhood,
//! group-closure testing, and the symmetrizing projection.
//!
//! Composition convention, fixed globally: `(a ∘ b)(i) = a(b(i))`. The
//! unitary representation is pinned by the conjugation relation
//! `U_π (X_1 ⊗ … ⊗ X_m) U_π† = X_{π(1)} ⊗ … ⊗ X_{π(m)}`, which forces the
//! basis map `U_π |v_1 … v_m⟩ = |v_{π(1)} … v_{π(m)}⟩` and the product rule
//! `U_a U_b = U_{b∘a}`.

use std::collections::HashSet;

use num_complex::Complex64 as C64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::{ComplexMatrix, ONE};
use crate::network::NetworkLayout;

/// Hard cap on any m!-sized enumeration (8! = 40320).
pub const FACTORIAL_BUDGET_M: usize = 8;

/// Permutation of {0..m-1} in one-line notation: `image[i] = π(i)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    image: Vec<usize>,
}

impl Permutation {
    pub fn identity(m: usize) -> Self {
        Self {
            image: (0..m).collect(),
        }
    }

    pub fn transposition(m: usize, a: usize, b: usize) -> Result<Self> {
        if a >= m || b >= m {
            return Err(Error::IndexOutOfRange {
                index: a.max(b),
                m,
            });
        }
        if a == b {
            return Err(Error::InvalidPermutation {
                reason: "transposition needs two distinct indices".into(),
            });
        }
        let mut image: Vec<usize> = (0..m).collect();
        image.swap(a, b);
        Ok(Self { image })
    }

    pub fn from_image(image: Vec<usize>) -> Result<Self> {
        let m = image.len();
        let mut seen = vec![false; m];
        for &v in &image {
            if v >= m || seen[v] {
                return Err(Error::InvalidPermutation {
                    reason: format!("image {image:?} is not a bijection on 0..{m}"),
                });
            }
            seen[v] = true;
        }
        Ok(Self { image })
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.image[i]
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.len() != other.len() {
            return Err(Error::DimensionMismatch {
                left: self.len(),
                right: other.len(),
                context: "compose",
            });
        }
        Ok(Self {
            image: other.image.iter().map(|&i| self.image[i]).collect(),
        })
    }

    pub fn inverse(&self) -> Self {
        let mut image = vec![0usize; self.len()];
        for (i, &v) in self.image.iter().enumerate() {
            image[v] = i;
        }
        Self { image }
    }

    /// Indices moved by the permutation, ascending.
    pub fn moved(&self) -> Vec<usize> {
        self.image
            .iter()
            .enumerate()
            .filter(|(i, &v)| *i != v)
            .map(|(i, _)| i)
            .collect()
    }

    pub fn is_transposition(&self) -> bool {
        self.moved().len() == 2
    }

    /// Lexicographic rank of the one-line notation (Lehmer code).
    pub fn rank(&self) -> usize {
        let m = self.len();
        let mut rank = 0usize;
        let mut fact = 1usize;
        // factorial weights accumulated right to left
        let mut weights = vec![1usize; m];
        for i in (0..m).rev() {
            weights[i] = fact;
            fact *= m - i;
        }
        for i in 0..m {
            let smaller_right = self.image[i + 1..]
                .iter()
                .filter(|&&v| v < self.image[i])
                .count();
            rank += smaller_right * weights[i];
        }
        rank
    }

    /// Inverse of [`Permutation::rank`].
    pub fn unrank(m: usize, mut rank: usize) -> Self {
        let mut available: Vec<usize> = (0..m).collect();
        let mut fact: usize = (1..m.max(1)).product();
        let mut image = Vec::with_capacity(m);
        for i in 0..m {
            let idx = if fact > 0 { rank / fact } else { 0 };
            rank %= fact.max(1);
            image.push(available.remove(idx));
            if i + 1 < m {
                fact /= m - 1 - i;
            }
        }
        Self { image }
    }

    /// Table `t` with `t[x] = y` where the digit of `y` at slot `s` is the
    /// digit of `x` at slot `π(s)`; this realizes `U_π |x⟩ = |t[x]⟩`.
    pub fn basis_index_map(&self, layout: &NetworkLayout) -> Vec<usize> {
        let dim = layout.dim();
        let m = layout.m();
        let mut table = vec![0usize; dim];
        for (x, slot) in table.iter_mut().enumerate() {
            let mut y = 0usize;
            for s in 0..m {
                y += layout.digit(x, self.image[s]) * layout.stride(s);
            }
            *slot = y;
        }
        table
    }
}

// JSON form: 1-based image array, e.g. [2, 1, 3].
impl Serialize for Permutation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let one_based: Vec<usize> = self.image.iter().map(|&i| i + 1).collect();
        one_based.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let one_based = Vec::<usize>::deserialize(d)?;
        if one_based.contains(&0) {
            return Err(serde::de::Error::custom(
                "permutation images are 1-based; 0 is not a valid image",
            ));
        }
        Permutation::from_image(one_based.into_iter().map(|i| i - 1).collect())
            .map_err(serde::de::Error::custom)
    }
}

/// All permutations of `m` symbols in lexicographic-rank order.
pub fn all_permutations(m: usize) -> Result<Vec<Permutation>> {
    if m > FACTORIAL_BUDGET_M {
        return Err(Error::BudgetExceeded {
            m,
            cap: FACTORIAL_BUDGET_M,
        });
    }
    let count: usize = (1..=m).product();
    Ok((0..count).map(|r| Permutation::unrank(m, r)).collect())
}

pub fn factorial(m: usize) -> usize {
    (1..=m).product()
}

/// A non-identity permutation allowed by the locality notion, together with
/// every neighborhood that enables it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalPermutation {
    pub perm: Permutation,
    pub enabled_by: Vec<usize>,
}

/// All non-identity permutations supported inside a single neighborhood.
///
/// Duplicates (allowed by several neighborhoods) appear once, tagged with
/// every enabling neighborhood index. `pairwise_only` restricts the result to
/// transpositions. Output is sorted by one-line image.
pub fn local_permutations(layout: &NetworkLayout, pairwise_only: bool) -> Vec<LocalPermutation> {
    let m = layout.m();
    let mut found: Vec<LocalPermutation> = Vec::new();
    for (j, nb) in layout.neighborhoods().iter().enumerate() {
        for perm in permutations_of_subset(m, nb) {
            if perm.is_identity() {
                continue;
            }
            if pairwise_only && !perm.is_transposition() {
                continue;
            }
            match found.iter_mut().find(|lp| lp.perm == perm) {
                Some(lp) => {
                    if !lp.enabled_by.contains(&j) {
                        lp.enabled_by.push(j);
                    }
                }
                None => found.push(LocalPermutation {
                    perm,
                    enabled_by: vec![j],
                }),
            }
        }
    }
    found.sort_by(|a, b| a.perm.image().cmp(b.perm.image()));
    found
}

/// Permutations of {0..m-1} that move only indices inside `subset`.
fn permutations_of_subset(m: usize, subset: &[usize]) -> Vec<Permutation> {
    let k = subset.len();
    let count: usize = (1..=k).product();
    let mut out = Vec::with_capacity(count);
    for r in 0..count {
        let inner = Permutation::unrank(k, r);
        let mut image: Vec<usize> = (0..m).collect();
        for (pos, &site) in subset.iter().enumerate() {
            image[site] = subset[inner.apply(pos)];
        }
        out.push(Permutation { image });
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GroupClosure {
    pub generates: bool,
    pub closure_size: usize,
}

/// Breadth-first closure of `gens` under composition; `generates` is true
/// when the closure is all of S_m.
pub fn generates_full_group(gens: &[Permutation], m: usize) -> Result<GroupClosure> {
    if m > FACTORIAL_BUDGET_M {
        return Err(Error::BudgetExceeded {
            m,
            cap: FACTORIAL_BUDGET_M,
        });
    }
    for g in gens {
        if g.len() != m {
            return Err(Error::DimensionMismatch {
                left: g.len(),
                right: m,
                context: "generates_full_group",
            });
        }
    }
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    let identity = Permutation::identity(m);
    seen.insert(identity.image.clone());
    let mut frontier = vec![identity];
    while let Some(current) = frontier.pop() {
        for g in gens {
            let next = g.compose(&current)?;
            if seen.insert(next.image.clone()) {
                frontier.push(next);
            }
        }
    }
    let closure_size = seen.len();
    Ok(GroupClosure {
        generates: closure_size == factorial(m),
        closure_size,
    })
}

/// A permutation together with its 0/1 unitary matrix on the network space.
#[derive(Debug, Clone)]
pub struct PermutationUnitary {
    pub perm: Permutation,
    pub matrix: ComplexMatrix,
}

/// Builds `U_π` from the basis index map; the defining conjugation relation
/// is enforced by tests rather than assumed.
pub fn permutation_unitary(perm: &Permutation, layout: &NetworkLayout) -> Result<PermutationUnitary> {
    if perm.len() != layout.m() {
        return Err(Error::DimensionMismatch {
            left: perm.len(),
            right: layout.m(),
            context: "permutation_unitary",
        });
    }
    let map = perm.basis_index_map(layout);
    let dim = layout.dim();
    let mut matrix = ComplexMatrix::zeros(dim);
    for (col, &row) in map.iter().enumerate() {
        matrix.set(row, col, ONE);
    }
    Ok(PermutationUnitary {
        perm: perm.clone(),
        matrix,
    })
}

/// `U_π Q U_π†` computed as a pure index gather; `inv_map` must be the basis
/// index map of `π⁻¹`.
pub fn conjugate_by_index_map(q: &ComplexMatrix, inv_map: &[usize]) -> ComplexMatrix {
    let dim = q.dim();
    debug_assert_eq!(inv_map.len(), dim);
    let mut out = ComplexMatrix::zeros(dim);
    for r in 0..dim {
        let src_r = inv_map[r];
        for c in 0..dim {
            out.set(r, c, q.at(src_r, inv_map[c]));
        }
    }
    out
}

/// The symmetrizing projection `Ē(Q) = (1/m!) Σ_π U_π Q U_π†`.
pub fn symmetrize(q: &ComplexMatrix, layout: &NetworkLayout) -> Result<ComplexMatrix> {
    let m = layout.m();
    if m > FACTORIAL_BUDGET_M {
        return Err(Error::BudgetExceeded {
            m,
            cap: FACTORIAL_BUDGET_M,
        });
    }
    if q.dim() != layout.dim() {
        return Err(Error::DimensionMismatch {
            left: q.dim(),
            right: layout.dim(),
            context: "symmetrize",
        });
    }
    let perms = all_permutations(m)?;
    let weight = C64::new(1.0 / perms.len() as f64, 0.0);
    let mut acc = ComplexMatrix::zeros(q.dim());
    for perm in &perms {
        let inv_map = perm.inverse().basis_index_map(layout);
        acc.axpy(weight, &conjugate_by_index_map(q, &inv_map));
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::{hs_inner, kron, pauli};
    use crate::random::{random_hermitian, random_matrix, rng_from_seed};

    fn t(m: usize, a: usize, b: usize) -> Permutation {
        Permutation::transposition(m, a, b).unwrap()
    }

    #[test]
    fn compose_identity_and_involution() {
        let e = Permutation::identity(3);
        let s = t(3, 0, 1);
        assert_eq!(e.compose(&s).unwrap(), s);
        assert_eq!(s.compose(&s).unwrap(), e);
    }

    #[test]
    fn compose_convention_anchor() {
        // (0 1) ∘ (1 2) maps 0→1→2→0: one-line image [1, 2, 0].
        // Frozen regression anchor for the (a∘b)(i) = a(b(i)) convention.
        let a = t(3, 0, 1);
        let b = t(3, 1, 2);
        let c = a.compose(&b).unwrap();
        assert_eq!(c.image(), &[1, 2, 0]);
    }

    #[test]
    fn inverse_round_trip() {
        let c = Permutation::from_image(vec![2, 0, 3, 1]).unwrap();
        assert!(c.compose(&c.inverse()).unwrap().is_identity());
        assert!(c.inverse().compose(&c).unwrap().is_identity());
    }

    #[test]
    fn rank_unrank_round_trip() {
        for m in 1..=5 {
            for r in 0..factorial(m) {
                let p = Permutation::unrank(m, r);
                assert_eq!(p.rank(), r, "m={m} r={r}");
            }
        }
    }

    #[test]
    fn lexicographic_rank_order() {
        // m = 2: [0,1] before [1,0]; m = 3 first and last
        assert_eq!(Permutation::unrank(2, 0).image(), &[0, 1]);
        assert_eq!(Permutation::unrank(2, 1).image(), &[1, 0]);
        assert_eq!(Permutation::unrank(3, 0).image(), &[0, 1, 2]);
        assert_eq!(Permutation::unrank(3, 5).image(), &[2, 1, 0]);
    }

    #[test]
    fn local_permutations_pairwise_on_path() {
        let layout = NetworkLayout::path(3, 2).unwrap();
        let locals = local_permutations(&layout, true);
        assert_eq!(locals.len(), 2);
        assert!(locals.iter().any(|lp| lp.perm == t(3, 0, 1)));
        assert!(locals.iter().any(|lp| lp.perm == t(3, 1, 2)));
    }

    #[test]
    fn local_permutations_full_s3_in_one_neighborhood() {
        let layout = NetworkLayout::complete(3, 2).unwrap();
        let locals = local_permutations(&layout, false);
        assert_eq!(locals.len(), 5);
    }

    #[test]
    fn local_permutations_disjoint_pairs() {
        let layout = NetworkLayout::new(4, 2, vec![vec![0, 1], vec![2, 3]]).unwrap();
        let locals = local_permutations(&layout, true);
        assert_eq!(locals.len(), 2);
        assert!(locals.iter().any(|lp| lp.perm == t(4, 0, 1)));
        assert!(locals.iter().any(|lp| lp.perm == t(4, 2, 3)));
    }

    #[test]
    fn shared_permutation_tagged_with_both_neighborhoods() {
        let layout = NetworkLayout::new(3, 2, vec![vec![0, 1], vec![0, 1, 2]]).unwrap();
        let locals = local_permutations(&layout, true);
        let swap01 = locals.iter().find(|lp| lp.perm == t(3, 0, 1)).unwrap();
        assert_eq!(swap01.enabled_by, vec![0, 1]);
    }

    #[test]
    fn closure_adjacent_transpositions() {
        let gens = vec![t(3, 0, 1), t(3, 1, 2)];
        let c = generates_full_group(&gens, 3).unwrap();
        assert!(c.generates);
        assert_eq!(c.closure_size, 6);
    }

    #[test]
    fn closure_single_swap_is_proper() {
        let c = generates_full_group(&[t(3, 0, 1)], 3).unwrap();
        assert!(!c.generates);
        assert_eq!(c.closure_size, 2);
    }

    #[test]
    fn closure_disconnected_swaps() {
        // Brute-force closure of {(0 1), (2 3)} on m = 4: {e, (01), (23), (01)(23)}.
        let c = generates_full_group(&[t(4, 0, 1), t(4, 2, 3)], 4).unwrap();
        assert!(!c.generates);
        assert_eq!(c.closure_size, 4);
    }

    #[test]
    fn closure_path_generates_for_small_m() {
        for m in 2..=6 {
            let gens: Vec<Permutation> = (0..m - 1).map(|i| t(m, i, i + 1)).collect();
            let c = generates_full_group(&gens, m).unwrap();
            assert!(c.generates, "path transpositions must generate S_{m}");
            assert_eq!(c.closure_size, factorial(m));
        }
    }

    #[test]
    fn unitary_of_identity() {
        let layout = NetworkLayout::path(2, 2).unwrap();
        let u = permutation_unitary(&Permutation::identity(2), &layout).unwrap();
        assert_eq!(u.matrix, ComplexMatrix::identity(4));
    }

    #[test]
    fn unitary_of_swap_is_swap_gate() {
        let layout = NetworkLayout::path(2, 2).unwrap();
        let u = permutation_unitary(&t(2, 0, 1), &layout).unwrap();
        let mut swap = ComplexMatrix::zeros(4);
        swap.set(0, 0, ONE);
        swap.set(1, 2, ONE);
        swap.set(2, 1, ONE);
        swap.set(3, 3, ONE);
        assert_eq!(u.matrix, swap);
    }

    #[test]
    fn three_cycle_unitary_has_order_three() {
        let layout = NetworkLayout::path(3, 2).unwrap();
        let cycle = Permutation::from_image(vec![1, 2, 0]).unwrap();
        let u = permutation_unitary(&cycle, &layout).unwrap().matrix;
        let u3 = u.matmul(&u).unwrap().matmul(&u).unwrap();
        assert_eq!(u3, ComplexMatrix::identity(8));
    }

    /// The §-defining conjugation relation, checked on random product
    /// operators: U_π (X_1 ⊗ … ⊗ X_m) U_π† = X_{π(1)} ⊗ … ⊗ X_{π(m)}.
    #[test]
    fn defining_conjugation_relation() {
        let mut rng = rng_from_seed(303);
        for m in 2..=4 {
            let layout = NetworkLayout::path(m, 2).unwrap();
            for r in 0..factorial(m) {
                let perm = Permutation::unrank(m, r);
                let u = permutation_unitary(&perm, &layout).unwrap().matrix;
                let udag = u.dagger();
                for _ in 0..(20 / factorial(m).min(20) + 1) {
                    let locals: Vec<ComplexMatrix> =
                        (0..m).map(|_| random_matrix(2, &mut rng)).collect();
                    let mut lhs_in = ComplexMatrix::identity(1);
                    let mut rhs = ComplexMatrix::identity(1);
                    for s in 0..m {
                        lhs_in = kron(&lhs_in, &locals[s]);
                        rhs = kron(&rhs, &locals[perm.apply(s)]);
                    }
                    let lhs = u.matmul(&lhs_in).unwrap().matmul(&udag).unwrap();
                    let dev = lhs.sub(&rhs).unwrap().frobenius_norm();
                    assert!(dev < 1e-12, "m={m} perm={:?} dev={dev}", perm.image());
                }
            }
        }
    }

    /// Product rule U_a U_b = U_{b∘a}, the relation the lifted dynamics
    /// depends on.
    #[test]
    fn unitary_product_rule() {
        let layout = NetworkLayout::path(3, 2).unwrap();
        let a = t(3, 0, 1);
        let b = t(3, 1, 2);
        let ua = permutation_unitary(&a, &layout).unwrap().matrix;
        let ub = permutation_unitary(&b, &layout).unwrap().matrix;
        let prod = ua.matmul(&ub).unwrap();
        let expect = permutation_unitary(&b.compose(&a).unwrap(), &layout)
            .unwrap()
            .matrix;
        assert_eq!(prod, expect);
    }

    #[test]
    fn conjugation_matches_index_map() {
        let mut rng = rng_from_seed(90);
        let layout = NetworkLayout::path(3, 2).unwrap();
        let perm = Permutation::from_image(vec![2, 0, 1]).unwrap();
        let q = random_matrix(8, &mut rng);
        let u = permutation_unitary(&perm, &layout).unwrap().matrix;
        let dense = u.matmul(&q).unwrap().matmul(&u.dagger()).unwrap();
        let gathered = conjugate_by_index_map(&q, &perm.inverse().basis_index_map(&layout));
        let dev = dense.sub(&gathered).unwrap().frobenius_norm();
        assert!(dev < 1e-13);
    }

    #[test]
    fn symmetrize_fixes_invariant_operator() {
        // Σ_i σz^(i) is permutation invariant
        let layout = NetworkLayout::path(3, 2).unwrap();
        let sz = pauli::sigma_z();
        let i2 = ComplexMatrix::identity(2);
        let mut q = ComplexMatrix::zeros(8);
        q.axpy(ONE, &kron(&kron(&sz, &i2), &i2));
        q.axpy(ONE, &kron(&kron(&i2, &sz), &i2));
        q.axpy(ONE, &kron(&kron(&i2, &i2), &sz));
        let s = symmetrize(&q, &layout).unwrap();
        assert!(s.sub(&q).unwrap().frobenius_norm() < 1e-12);
    }

    #[test]
    fn symmetrize_two_qubit_basis_projector() {
        // Ē(|01⟩⟨01|) = (|01⟩⟨01| + |10⟩⟨10|)/2
        let layout = NetworkLayout::path(2, 2).unwrap();
        let q = ComplexMatrix::diagonal(&[0.0, 1.0, 0.0, 0.0]);
        let expect = ComplexMatrix::diagonal(&[0.0, 0.5, 0.5, 0.0]);
        let s = symmetrize(&q, &layout).unwrap();
        assert!(s.sub(&expect).unwrap().frobenius_norm() < 1e-14);
    }

    #[test]
    fn symmetrize_is_idempotent_trace_preserving_self_adjoint() {
        let mut rng = rng_from_seed(17);
        let layout = NetworkLayout::path(3, 2).unwrap();
        let a = random_hermitian(8, &mut rng);
        let b = random_hermitian(8, &mut rng);
        let sa = symmetrize(&a, &layout).unwrap();
        let sb = symmetrize(&b, &layout).unwrap();

        let twice = symmetrize(&sa, &layout).unwrap();
        assert!(twice.sub(&sa).unwrap().frobenius_norm() < 1e-12);

        assert!((sa.trace() - a.trace()).norm() < 1e-12);
        assert!(sa.hermiticity_deviation() < 1e-12);

        // self-adjointness w.r.t. the HS inner product
        let lhs = hs_inner(&sa, &b).unwrap();
        let rhs = hs_inner(&a, &sb).unwrap();
        assert!((lhs - rhs).norm() < 1e-10);
    }

    #[test]
    fn symmetrized_operator_is_permutation_invariant() {
        let mut rng = rng_from_seed(23);
        let layout = NetworkLayout::path(3, 2).unwrap();
        let s = symmetrize(&random_hermitian(8, &mut rng), &layout).unwrap();
        for perm in all_permutations(3).unwrap() {
            let conj = conjugate_by_index_map(&s, &perm.inverse().basis_index_map(&layout));
            assert!(conj.sub(&s).unwrap().frobenius_norm() < 1e-10);
        }
    }

    #[test]
    fn symmetrize_budget_enforced() {
        let layout = NetworkLayout::path(9, 2).unwrap();
        let q = ComplexMatrix::zeros(512);
        assert!(matches!(
            symmetrize(&q, &layout),
            Err(Error::BudgetExceeded { .. })
        ));
    }
}
