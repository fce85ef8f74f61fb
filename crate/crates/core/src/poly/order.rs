use std::cmp::Ordering;

use super::term::Term;
use super::var::Space;

/// Direction of a lexicographic order inside one variable space.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    /// v_1 ≺ v_2 ≺ ⋯ ≺ v_n: the highest index is most significant.
    Ascending,
    /// v_1 ≻ v_2 ≻ ⋯ ≻ v_n: the lowest index is most significant.
    Descending,
}

/// A multiplicative term order.
///
/// `Lex` only looks at the variables of its space; `Product` compares by the
/// first order and breaks ties with the second, so `Product(lex r, lex z)`
/// makes every r-free term smaller than any term involving r.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum TermOrder {
    Lex { space: Space, direction: Direction },
    Product(Box<TermOrder>, Box<TermOrder>),
}

impl TermOrder {
    pub fn lex(space: Space, direction: Direction) -> TermOrder {
        TermOrder::Lex { space, direction }
    }

    pub fn product(first: TermOrder, second: TermOrder) -> TermOrder {
        TermOrder::Product(Box::new(first), Box::new(second))
    }

    /// Lex on r with r_1 ≺ r_2 ≺ ⋯, the order used by reduce/canonize.
    pub fn r_lex() -> TermOrder {
        TermOrder::lex(Space::R, Direction::Ascending)
    }

    /// Elimination order for the gist ideal: r-part first (r_1 ≺ r_2 ≺ ⋯),
    /// then lex on `second` with index 1 most significant.
    pub fn elimination(second: Space) -> TermOrder {
        TermOrder::product(TermOrder::r_lex(), TermOrder::lex(second, Direction::Descending))
    }

    pub fn cmp(&self, a: &Term, b: &Term) -> Ordering {
        match self {
            TermOrder::Lex { space, direction } => lex_cmp(a, b, *space, *direction),
            TermOrder::Product(first, second) => {
                first.cmp(a, b).then_with(|| second.cmp(a, b))
            }
        }
    }

    /// Spaces covered by this order, most significant first.
    pub fn spaces(&self) -> Vec<(Space, Direction)> {
        match self {
            TermOrder::Lex { space, direction } => vec![(*space, *direction)],
            TermOrder::Product(a, b) => {
                let mut v = a.spaces();
                v.extend(b.spaces());
                v
            }
        }
    }
}

fn space_range(t: &Term, space: Space) -> &[(crate::poly::Var, u32)] {
    let e = t.exps();
    let lo = e.partition_point(|(v, _)| v.space < space);
    let hi = e.partition_point(|(v, _)| v.space <= space);
    &e[lo..hi]
}

fn lex_cmp(a: &Term, b: &Term, space: Space, dir: Direction) -> Ordering {
    let (xa, xb) = (space_range(a, space), space_range(b, space));
    let n = xa.len().min(xb.len());
    for k in 0..n {
        let (pa, pb) = match dir {
            Direction::Ascending => (xa[xa.len() - 1 - k], xb[xb.len() - 1 - k]),
            Direction::Descending => (xa[k], xb[k]),
        };
        if pa.0.index != pb.0.index {
            // The term carrying the more significant variable is larger.
            let a_more_significant = match dir {
                Direction::Ascending => pa.0.index > pb.0.index,
                Direction::Descending => pa.0.index < pb.0.index,
            };
            return if a_more_significant { Ordering::Greater } else { Ordering::Less };
        }
        if pa.1 != pb.1 {
            return pa.1.cmp(&pb.1);
        }
    }
    xa.len().cmp(&xb.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::var::Var;

    #[test]
    fn ascending_lex_prefers_high_index() {
        let o = TermOrder::r_lex();
        let r1 = Term::var(Var::r(1));
        let r2 = Term::var(Var::r(2));
        assert_eq!(o.cmp(&r1, &r2), Ordering::Less);
        assert_eq!(o.cmp(&r1.pow(5), &r2), Ordering::Less);
        assert_eq!(o.cmp(&Term::one(), &r1), Ordering::Less);
        assert_eq!(o.cmp(&r1.mul(&r2), &r2.pow(2)), Ordering::Less);
    }

    #[test]
    fn elimination_puts_r_first() {
        let o = TermOrder::elimination(Space::Z);
        let r1 = Term::var(Var::r(1));
        let z1 = Term::var(Var::z(1));
        let z2 = Term::var(Var::z(2));
        assert_eq!(o.cmp(&z1.pow(9), &r1), Ordering::Less);
        assert_eq!(o.cmp(&z2.pow(9), &z1), Ordering::Less);
        assert_eq!(o.cmp(&r1.mul(&z2), &r1.mul(&z1)), Ordering::Less);
    }
}
