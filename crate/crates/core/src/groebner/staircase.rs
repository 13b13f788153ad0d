//! Combinatorics of monomial leading ideals: standard-monomial counting
//! and independent-set dimension.

use crate::polyalg::Monomial;

use super::Colength;

/// Number of monomials outside the monomial ideal generated by `lms`.
///
/// Finite iff some pure power of every variable appears among the `lms`
/// (equivalently the quotient is supported at the origin only).
pub fn staircase_count(lms: &[Monomial], nvars: usize) -> Colength {
    if lms.iter().any(|m| m.is_one()) {
        return Colength::Finite(0);
    }
    // Bound for each variable: minimal pure-power exponent.
    let mut bounds = vec![None::<u32>; nvars];
    for m in lms {
        if let Some(i) = m.pure_power() {
            let e = m.exps()[i];
            bounds[i] = Some(bounds[i].map_or(e, |b| b.min(e)));
        }
    }
    let Some(bounds) = bounds.into_iter().collect::<Option<Vec<u32>>>() else {
        return Colength::Infinite;
    };
    // Enumerate the box under the pure-power corner and count survivors.
    let mut count = 0u64;
    let mut exps = vec![0u32; nvars];
    loop {
        let m = Monomial::from_exps(exps.clone());
        if !lms.iter().any(|l| l.divides(&m)) {
            count += 1;
        }
        // Odometer increment.
        let mut i = 0;
        loop {
            if i == nvars {
                return Colength::Finite(count);
            }
            exps[i] += 1;
            if exps[i] < bounds[i] {
                break;
            }
            exps[i] = 0;
            i += 1;
        }
    }
}

/// Krull dimension of the quotient by the monomial ideal: the maximal size
/// of a variable set meeting the support of no leading monomial.
pub fn independent_set_dimension(lms: &[Monomial], nvars: usize) -> i64 {
    let mut best = 0i64;
    for mask in 0u32..(1u32 << nvars) {
        let s: Vec<bool> = (0..nvars).map(|i| mask & (1 << i) != 0).collect();
        let size = s.iter().filter(|&&b| b).count() as i64;
        if size <= best {
            continue;
        }
        if !lms.iter().any(|m| m.supported_in(&s)) {
            best = size;
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::Colength;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exps(e.to_vec())
    }

    #[test]
    fn box_count_matches_staircase() {
        // (x^2, y^2): standard monomials {1, x, y, xy}.
        assert_eq!(
            staircase_count(&[m(&[2, 0]), m(&[0, 2])], 2),
            Colength::Finite(4)
        );
        // (x^2, x*y, y^3): {1, x, y, y^2}.
        assert_eq!(
            staircase_count(&[m(&[2, 0]), m(&[1, 1]), m(&[0, 3])], 2),
            Colength::Finite(4)
        );
    }

    #[test]
    fn missing_pure_power_is_infinite() {
        assert_eq!(staircase_count(&[m(&[2, 0])], 2), Colength::Infinite);
    }

    #[test]
    fn unit_ideal_has_colength_zero() {
        assert_eq!(staircase_count(&[m(&[0, 0])], 2), Colength::Finite(0));
    }

    #[test]
    fn dimension_from_independent_sets() {
        // Hypersurface x*y in two variables: dimension 1.
        assert_eq!(independent_set_dimension(&[m(&[1, 1])], 2), 1);
        // Zero ideal: dimension n.
        assert_eq!(independent_set_dimension(&[], 3), 3);
        // m-primary: dimension 0.
        assert_eq!(
            independent_set_dimension(&[m(&[1, 0]), m(&[0, 1])], 2),
            0
        );
    }
}
