//! Deterministic numeric formatting for batch output.
//!
//! Values are rounded to a fixed number of significant digits and printed
//! positionally with trailing zeros trimmed, so `0.5` stays `0.5` at any
//! precision while long fractions cut off reproducibly. The same strings go
//! into CSV fields and JSON number literals.

/// Formats `value` with at most `digits` significant digits.
pub(crate) fn format_significant(value: f64, digits: u32) -> String {
    if value == 0.0 {
        return "0".to_string();
    }
    if !value.is_finite() {
        return value.to_string();
    }
    let scientific = format!("{:.*e}", digits.saturating_sub(1) as usize, value);
    let (mantissa, exponent) = scientific
        .split_once('e')
        .expect("LowerExp always emits an exponent");
    let exponent: i32 = exponent.parse().expect("LowerExp exponent is an integer");
    let negative = mantissa.starts_with('-');
    let digits_only: String = mantissa
        .chars()
        .filter(|c| c.is_ascii_digit())
        .collect::<String>()
        .trim_end_matches('0')
        .to_string();
    let digits_only = if digits_only.is_empty() {
        // the mantissa rounded to a bare zero (cannot happen for the
        // first digit of a nonzero value, but stay total)
        return "0".to_string();
    } else {
        digits_only
    };

    let mut out = String::new();
    if negative {
        out.push('-');
    }
    if exponent >= 0 {
        let integer_len = exponent as usize + 1;
        if digits_only.len() <= integer_len {
            out.push_str(&digits_only);
            out.extend(std::iter::repeat_n('0', integer_len - digits_only.len()));
        } else {
            out.push_str(&digits_only[..integer_len]);
            out.push('.');
            out.push_str(&digits_only[integer_len..]);
        }
    } else {
        out.push_str("0.");
        out.extend(std::iter::repeat_n('0', (-exponent) as usize - 1));
        out.push_str(&digits_only);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn short_values_stay_short() {
        assert_eq!(format_significant(0.0, 12), "0");
        assert_eq!(format_significant(-0.0, 12), "0");
        assert_eq!(format_significant(1.0, 12), "1");
        assert_eq!(format_significant(0.5, 12), "0.5");
        assert_eq!(format_significant(-0.5, 12), "-0.5");
        assert_eq!(format_significant(100.0, 12), "100");
        assert_eq!(format_significant(0.05, 6), "0.05");
    }

    #[test]
    fn long_fractions_cut_at_the_requested_digits() {
        assert_eq!(format_significant(3.0 / 7.0, 12), "0.428571428571");
        assert_eq!(format_significant(4.0 / 7.0, 12), "0.571428571429");
        assert_eq!(format_significant(std::f64::consts::LN_2, 12), "0.69314718056");
        assert_eq!(format_significant(1.0 / 3.0, 6), "0.333333");
        assert_eq!(format_significant(2.0 / 3.0, 6), "0.666667");
    }

    #[test]
    fn values_next_to_one_collapse_cleanly() {
        assert_eq!(format_significant(1.0000000000000002, 12), "1");
        assert_eq!(format_significant(0.9999999999999999, 12), "1");
    }
}
