use std::fmt;

/// The disjoint variable families.
///
/// `X` are the formal roots x_1..x_n, `R` the distinct roots r_1..r_m, `Z`
/// the symbols standing for the symmetric generators, `K` indeterminate
/// coefficients and `Y` generic basis symbols.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Space {
    X,
    R,
    Z,
    K,
    Y,
}

impl Space {
    pub fn letter(self) -> char {
        match self {
            Space::X => 'x',
            Space::R => 'r',
            Space::Z => 'z',
            Space::K => 'k',
            Space::Y => 'y',
        }
    }

    pub fn from_letter(c: char) -> Option<Space> {
        match c {
            'x' => Some(Space::X),
            'r' => Some(Space::R),
            'z' => Some(Space::Z),
            'k' => Some(Space::K),
            'y' => Some(Space::Y),
            _ => None,
        }
    }
}

/// A variable: a space plus a 1-based index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Var {
    pub space: Space,
    pub index: u32,
}

impl Var {
    pub fn new(space: Space, index: u32) -> Var {
        assert!(index >= 1, "variable indices are 1-based");
        Var { space, index }
    }

    pub fn x(i: u32) -> Var {
        Var::new(Space::X, i)
    }
    pub fn r(i: u32) -> Var {
        Var::new(Space::R, i)
    }
    pub fn z(i: u32) -> Var {
        Var::new(Space::Z, i)
    }
    pub fn k(i: u32) -> Var {
        Var::new(Space::K, i)
    }
    pub fn y(i: u32) -> Var {
        Var::new(Space::Y, i)
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.space.letter(), self.index)
    }
}

/// A variable space with a fixed number of variables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct VarSpace {
    pub kind: Space,
    pub count: u32,
}

impl VarSpace {
    pub fn new(kind: Space, count: u32) -> VarSpace {
        VarSpace { kind, count }
    }

    pub fn vars(&self) -> impl Iterator<Item = Var> + '_ {
        (1..=self.count).map(move |i| Var::new(self.kind, i))
    }

    pub fn contains(&self, v: Var) -> bool {
        v.space == self.kind && v.index >= 1 && v.index <= self.count
    }
}
