//! Term orders: global degrevlex, local negdegrevlex, and a block
//! elimination order for auxiliary variables.

use std::cmp::Ordering;

use super::Monomial;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MonomialOrder {
    /// Global: total degree, ties broken reverse-lexicographically.
    DegRevLex,
    /// Local: smaller total degree wins, same tie break.  `x_i < 1` for all `i`.
    NegDegRevLex,
    /// Eliminate the first `block` variables: degrevlex on the block, then
    /// degrevlex on the remaining variables.  Global.
    Elim { block: usize },
}

/// Revlex tie break on a slice range: the monomial whose last differing
/// exponent is *smaller* is the larger one.
fn revlex(a: &[u32], b: &[u32]) -> Ordering {
    for (x, y) in a.iter().zip(b.iter()).rev() {
        if x != y {
            return if x < y { Ordering::Greater } else { Ordering::Less };
        }
    }
    Ordering::Equal
}

fn degrevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u64 = a.iter().map(|&e| e as u64).sum();
    let db: u64 = b.iter().map(|&e| e as u64).sum();
    da.cmp(&db).then_with(|| revlex(a, b))
}

impl MonomialOrder {
    /// Total order on monomials; `Greater` means "leads".
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let (ae, be) = (a.exps(), b.exps());
        match *self {
            MonomialOrder::DegRevLex => degrevlex(ae, be),
            MonomialOrder::NegDegRevLex => {
                let da = a.total_degree();
                let db = b.total_degree();
                db.cmp(&da).then_with(|| revlex(ae, be))
            }
            MonomialOrder::Elim { block } => degrevlex(&ae[..block], &be[..block])
                .then_with(|| degrevlex(&ae[block..], &be[block..])),
        }
    }

    /// Local orders satisfy `x_i < 1`; leading terms have minimal degree.
    pub fn is_local(&self) -> bool {
        matches!(self, MonomialOrder::NegDegRevLex)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exps(e.to_vec())
    }

    #[test]
    fn global_prefers_high_degree() {
        let ord = MonomialOrder::DegRevLex;
        assert_eq!(ord.cmp(&m(&[2, 0]), &m(&[0, 1])), Ordering::Greater);
        // 1 < x for all variables
        assert_eq!(ord.cmp(&m(&[0, 0]), &m(&[1, 0])), Ordering::Less);
    }

    #[test]
    fn local_prefers_low_degree() {
        let ord = MonomialOrder::NegDegRevLex;
        // x^2 + y: y leads locally
        assert_eq!(ord.cmp(&m(&[2, 0]), &m(&[0, 1])), Ordering::Less);
        // x < 1
        assert_eq!(ord.cmp(&m(&[1, 0]), &m(&[0, 0])), Ordering::Less);
    }

    #[test]
    fn degrevlex_tie_break() {
        // x*z vs y^2 in (x,y,z): same degree, last differing exponent is z:
        // xz has z-exp 1 > 0, so xz < y^2.
        let ord = MonomialOrder::DegRevLex;
        assert_eq!(
            ord.cmp(&m(&[1, 0, 1]), &m(&[0, 2, 0])),
            Ordering::Less
        );
    }

    #[test]
    fn elimination_block_dominates() {
        // First variable is eliminated: any power of t beats everything else.
        let ord = MonomialOrder::Elim { block: 1 };
        assert_eq!(ord.cmp(&m(&[1, 0, 0]), &m(&[0, 5, 5])), Ordering::Greater);
    }

    #[test]
    fn orders_are_multiplicative() {
        let orders = [
            MonomialOrder::DegRevLex,
            MonomialOrder::NegDegRevLex,
            MonomialOrder::Elim { block: 1 },
        ];
        let a = m(&[1, 2, 0]);
        let b = m(&[0, 1, 3]);
        let c = m(&[2, 0, 1]);
        for ord in orders {
            let ab = ord.cmp(&a, &b);
            assert_eq!(ord.cmp(&a.mul(&c), &b.mul(&c)), ab);
        }
    }
}
