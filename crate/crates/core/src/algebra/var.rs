use std::fmt;

/// A polynomial indeterminate.
///
/// The derived order is the canonical variable order: x-entries row-major,
/// then y-entries row-major, then the two parameters. Indices are 1-based.
/// Rectangular blocks (rows up to `2m`) are allowed for the homogeneous
/// model used by the Cayley operator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VarId {
    X(u8, u8),
    Y(u8, u8),
    /// First parameter: `s` in the E/F/H families, `lambda` in D/B/omega.
    S,
    /// Second parameter: `t`, or `mu`.
    T,
}

impl VarId {
    pub fn x(i: usize, j: usize) -> Self {
        VarId::X(i as u8, j as u8)
    }

    pub fn y(i: usize, j: usize) -> Self {
        VarId::Y(i as u8, j as u8)
    }

    pub fn is_x(self) -> bool {
        matches!(self, VarId::X(..))
    }

    pub fn is_y(self) -> bool {
        matches!(self, VarId::Y(..))
    }

    pub fn is_param(self) -> bool {
        matches!(self, VarId::S | VarId::T)
    }

    /// The x-variable with the same indices (identity on x, params).
    pub fn to_x(self) -> Self {
        match self {
            VarId::Y(i, j) => VarId::X(i, j),
            v => v,
        }
    }

    pub fn to_y(self) -> Self {
        match self {
            VarId::X(i, j) => VarId::Y(i, j),
            v => v,
        }
    }

    /// All `rows x cols` entries of the x-block, row-major.
    pub fn x_block(rows: usize, cols: usize) -> Vec<VarId> {
        (1..=rows)
            .flat_map(|i| (1..=cols).map(move |j| VarId::x(i, j)))
            .collect()
    }

    pub fn y_block(rows: usize, cols: usize) -> Vec<VarId> {
        (1..=rows)
            .flat_map(|i| (1..=cols).map(move |j| VarId::y(i, j)))
            .collect()
    }
}

impl fmt::Display for VarId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VarId::X(i, j) => write!(f, "x[{i}][{j}]"),
            VarId::Y(i, j) => write!(f, "y[{i}][{j}]"),
            VarId::S => f.write_str("s"),
            VarId::T => f.write_str("t"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_order() {
        let mut v = vec![VarId::T, VarId::y(1, 1), VarId::S, VarId::x(2, 1), VarId::x(1, 2)];
        v.sort();
        assert_eq!(
            v,
            vec![VarId::x(1, 2), VarId::x(2, 1), VarId::y(1, 1), VarId::S, VarId::T]
        );
    }
}
