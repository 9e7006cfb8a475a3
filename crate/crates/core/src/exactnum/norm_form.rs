use super::field::{FieldDesc, OmegaKind};

/// Value of the norm form N(x + yω) for the field.
pub fn norm_form(x: i64, y: i64, field: FieldDesc) -> i128 {
    let (x, y) = (x as i128, y as i128);
    let n = field.omega_norm() as i128;
    match field.omega_kind() {
        // x² − (D_K/4)·y²
        OmegaKind::HalfSqrt => x * x + n * y * y,
        // x² + xy + ((1 − D_K)/4)·y²
        OmegaKind::HalfOnePlusSqrt => x * x + x * y + n * y * y,
    }
}

/// Finds integers (x, y) with N(x + yω) = n, preferring the smallest |y| and
/// then the smallest nonnegative x. Returns `None` when n is not a norm from O_K.
pub fn norm_representable(n: u64, field: FieldDesc) -> Option<(i64, i64)> {
    if n == 0 {
        return None;
    }
    let nn = n as i128;
    let ymax = ((4.0 * n as f64) / (-field.dk() as f64)).sqrt().floor() as i64 + 1;
    for y in 0..=ymax {
        let xmax = (n as f64).sqrt() as i64 + y / 2 + 1;
        for x in (0..=xmax).flat_map(|x| [x, -x]) {
            if norm_form(x, y, field) == nn {
                return Some((x, y));
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let g = FieldDesc::gauss();
        assert_eq!(norm_representable(2, g), Some((1, 1)));
        assert_eq!(norm_representable(3, g), None);
        assert_eq!(norm_representable(1, g), Some((1, 0)));
        let e = FieldDesc::eisenstein();
        let (x, y) = norm_representable(3, e).unwrap();
        assert_eq!(x * x + x * y + y * y, 3);
    }

    /// Brute force over a box much wider than the search bound.
    fn oracle(n: u64, field: FieldDesc) -> bool {
        let r = 4 * ((n as f64).sqrt() as i64 + 2);
        (-r..=r).any(|x| (-r..=r).any(|y| norm_form(x, y, field) == n as i128))
    }

    #[test]
    fn agrees_with_wide_box_search() {
        for dk in [-3, -4, -7, -8, -11, -15, -20] {
            let f = FieldDesc::new(dk).unwrap();
            for n in 1..=200u64 {
                let got = norm_representable(n, f);
                if let Some((x, y)) = got {
                    assert_eq!(norm_form(x, y, f), n as i128);
                }
                assert_eq!(got.is_some(), oracle(n, f), "dk={dk} n={n}");
            }
        }
    }
}
