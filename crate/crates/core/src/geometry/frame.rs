use crate::field::{FieldError, QuadScalar};

use super::projective::{dot, Triple};
use super::{Arrangement, GeomError, ProjLine};

/// Coefficients of `x = 0`, `x = z`, `y = 0`, `y = z`.
pub const GRID_LINES: [[i64; 3]; 4] = [[1, 0, 0], [1, 0, -1], [0, 1, 0], [0, 1, -1]];

type Matrix = [Triple; 3];

fn det(m: &Matrix) -> Result<QuadScalar, FieldError> {
    let cof = adjugate(m)?;
    // first row of m against first column of adj(m)
    dot(&m[0], &[cof[0][0].clone(), cof[1][0].clone(), cof[2][0].clone()])
}

// adj(m)[j][i] is the (i, j) cofactor
fn adjugate(m: &Matrix) -> Result<Matrix, FieldError> {
    let minor = |r0: usize, r1: usize, c0: usize, c1: usize| {
        m[r0][c0].checked_mul(&m[r1][c1])?.checked_sub(&m[r0][c1].checked_mul(&m[r1][c0])?)
    };
    let idx = |k: usize| match k {
        0 => (1, 2),
        1 => (0, 2),
        _ => (0, 1),
    };
    let zero = QuadScalar::from_int(0);
    let mut adj: Matrix = std::array::from_fn(|_| std::array::from_fn(|_| zero.clone()));
    for i in 0..3 {
        for j in 0..3 {
            let (r0, r1) = idx(i);
            let (c0, c1) = idx(j);
            let v = minor(r0, r1, c0, c1)?;
            adj[j][i] = if (i + j) % 2 == 0 { v } else { -v };
        }
    }
    Ok(adj)
}

fn mul_vec(m: &Matrix, v: &Triple) -> Result<Triple, FieldError> {
    Ok([dot(&m[0], v)?, dot(&m[1], v)?, dot(&m[2], v)?])
}

fn mul(a: &Matrix, b: &Matrix) -> Result<Matrix, FieldError> {
    let col = |j: usize| [b[0][j].clone(), b[1][j].clone(), b[2][j].clone()];
    let cols = [col(0), col(1), col(2)];
    let mut out = a.clone();
    for (i, row) in out.iter_mut().enumerate() {
        for j in 0..3 {
            row[j] = dot(&a[i], &cols[j])?;
        }
    }
    Ok(out)
}

/// Matrix sending the basis vectors and `(1, 1, 1)` to multiples of `v[0..3]` and `v[3]`;
/// `None` if three of the four vectors are dependent.
fn frame_matrix(v: &[Triple; 4]) -> Result<Option<Matrix>, FieldError> {
    let cols: Matrix = std::array::from_fn(|i| std::array::from_fn(|j| v[j][i].clone()));
    if det(&cols)?.is_zero() {
        return Ok(None);
    }
    let c = mul_vec(&adjugate(&cols)?, &v[3])?;
    if c.iter().any(QuadScalar::is_zero) {
        return Ok(None);
    }
    let mut m = cols;
    for row in m.iter_mut() {
        for (j, entry) in row.iter_mut().enumerate() {
            *entry = entry.checked_mul(&c[j])?;
        }
    }
    Ok(Some(m))
}

/// Changes coordinates so that lines `grid[0..4]` (1-based) become `x = 0`, `x = z`,
/// `y = 0`, `y = z`. Fails if three of the four are concurrent.
pub fn grid_frame(a: &Arrangement, grid: [usize; 4]) -> Result<Arrangement, GeomError> {
    let field = a.field();
    let src: [Triple; 4] = [
        a.line(grid[0])?.coeffs().clone(),
        a.line(grid[1])?.coeffs().clone(),
        a.line(grid[2])?.coeffs().clone(),
        a.line(grid[3])?.coeffs().clone(),
    ];
    let dst: [Triple; 4] = GRID_LINES.map(|t| t.map(|c| QuadScalar::from_int(c).in_field(field).unwrap()));
    let concurrent = GeomError::ConcurrentGrid { lines: grid };
    let p_src = frame_matrix(&src)?.ok_or(concurrent.clone())?;
    let p_dst = frame_matrix(&dst)?.expect("the grid lines are in general position");
    // lines transform as covectors; up to scale, inverse(p_src) is adj(p_src)
    let t = mul(&p_dst, &adjugate(&p_src)?)?;
    let lines = a
        .lines()
        .iter()
        .map(|l| ProjLine::from_triple(&mul_vec(&t, l.coeffs())?))
        .collect::<Result<Vec<_>, _>>()?;
    Arrangement::new(a.name(), field, lines)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;
    use crate::geometry::{lattice_of, lines_proj_equal};

    fn arr(triples: &[[i64; 3]]) -> Arrangement {
        let lines = triples
            .iter()
            .map(|t| ProjLine::from_triple(&t.map(QuadScalar::from_int)).unwrap())
            .collect();
        Arrangement::new("t", FieldSpec::Rational, lines).unwrap()
    }

    #[test]
    fn grid_lines_land_on_targets() {
        let a = arr(&[[1, 2, 3], [0, 1, 5], [2, -1, 1], [3, 3, -1], [1, 1, 1]]);
        let b = grid_frame(&a, [2, 4, 1, 3]).unwrap();
        for (k, &i) in [2, 4, 1, 3].iter().enumerate() {
            let target = ProjLine::from_triple(&GRID_LINES[k].map(QuadScalar::from_int)).unwrap();
            assert!(lines_proj_equal(b.line(i).unwrap(), &target));
        }
        // projective changes keep the lattice
        assert_eq!(lattice_of(&a).unwrap().1.point_sets(), lattice_of(&b).unwrap().1.point_sets());
    }

    #[test]
    fn identity_on_a_standard_grid() {
        let a = arr(&[[1, 0, 0], [1, 0, -1], [0, 1, 0], [0, 1, -1], [1, 1, 7]]);
        assert_eq!(grid_frame(&a, [1, 2, 3, 4]).unwrap(), a);
    }

    #[test]
    fn concurrent_grid_rejected() {
        let a = arr(&[[1, 0, 0], [0, 1, 0], [1, 1, 0], [0, 0, 1]]);
        assert!(matches!(grid_frame(&a, [1, 2, 3, 4]), Err(GeomError::ConcurrentGrid { .. })));
    }
}
