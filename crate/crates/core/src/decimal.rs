/// Formats `x` rounded to 12 significant digits, using the shortest decimal
/// that reads back to the rounded value.
pub fn format_decimal(x: f64) -> String {
    if !x.is_finite() {
        return format!("{x}");
    }
    let rounded: f64 = format!("{x:.11e}").parse().unwrap_or(x);
    format!("{rounded}")
}

#[cfg(test)]
mod tests {
    use super::format_decimal;

    #[test]
    fn short_values_print_plainly() {
        assert_eq!(format_decimal(1.0), "1");
        assert_eq!(format_decimal(0.5), "0.5");
        assert_eq!(format_decimal(1.25e-3), "0.00125");
    }

    #[test]
    fn long_values_are_rounded() {
        assert_eq!(format_decimal(std::f64::consts::PI), "3.14159265359");
        assert_eq!(format_decimal(1.0 / 3.0), "0.333333333333");
    }

    #[test]
    fn twelve_digit_values_round_trip() {
        for x in [0.731548234117, 1.49999999999, 12.3456789012] {
            let back: f64 = format_decimal(x).parse().unwrap();
            assert_eq!(back, x);
        }
    }
}
