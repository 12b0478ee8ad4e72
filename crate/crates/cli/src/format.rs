/// 17 significant digits, fixed notation for moderate magnitudes and
/// scientific otherwise. Always round-trips.
pub fn g17(v: f64) -> String {
    if v == 0.0 || !v.is_finite() {
        return format!("{v}");
    }
    let exp = v.abs().log10().floor() as i32;
    if (-5..16).contains(&exp) {
        format!("{:.*}", (16 - exp) as usize, v)
    } else {
        format!("{v:.16e}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trips() {
        for v in [4.93073, -1581192.153, 1.0 / 3.0, 1e-7, 6.02e23, 0.0, -2.5e-300] {
            assert_eq!(g17(v).parse::<f64>().unwrap(), v, "{}", g17(v));
        }
        assert_eq!(g17(1.5), "1.5000000000000000");
        assert_eq!(g17(-1581950.0), "-1581950.0000000000");
    }
}
