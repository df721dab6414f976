//! Number formatting shared by the CSV writers.

/// Five significant digits with a leading `0.`, e.g. `0.21152E-05`.
pub fn sci5(x: f64) -> String {
    if x == 0.0 {
        return "0.00000E+00".into();
    }
    if !x.is_finite() {
        return format!("{x}");
    }
    // `{:.4E}` gives `2.1152E-6`; shift the point one place left.
    let s = format!("{:.4E}", x.abs());
    let (mant, exp) = s.split_once('E').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    let digits: String = mant.chars().filter(|c| *c != '.').collect();
    let e = exp + 1;
    let sign = if x < 0.0 { "-" } else { "" };
    let esign = if e < 0 { '-' } else { '+' };
    format!("{sign}0.{digits}E{esign}{:02}", e.abs())
}

/// Seconds with five decimals.
pub fn seconds(t: f64) -> String {
    format!("{t:.5}")
}
