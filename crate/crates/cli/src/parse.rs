//! Flag-value parsers: inclusive `a..b` ranges, angles with `pi/k`
//! literals, and `x1,y1;x2,y2` factor lists.

use std::f64::consts::PI;

/// `a..b` (inclusive) or a bare `a`.
pub fn parse_range(s: &str) -> Result<(u32, u32), String> {
    let t = s.trim();
    if let Some((lo, hi)) = t.split_once("..") {
        let lo: u32 = lo
            .trim()
            .parse()
            .map_err(|_| format!("bad range start '{lo}'"))?;
        let hi: u32 = hi
            .trim()
            .parse()
            .map_err(|_| format!("bad range end '{hi}'"))?;
        if lo > hi {
            return Err(format!("range {lo}..{hi} is empty"));
        }
        Ok((lo, hi))
    } else {
        let n: u32 = t.parse().map_err(|_| format!("bad range '{t}'"))?;
        Ok((n, n))
    }
}

/// Decimal radians, or `pi` literals of the shape `[sign][coef]pi[/div]`:
/// `pi/6`, `3pi/4`, `-pi/2`, `2pi`, `0.7853981`.
pub fn parse_angle(s: &str) -> Result<f64, String> {
    let t = s.trim();
    let value = if let Some(idx) = t.find("pi") {
        let coef = match t[..idx].trim() {
            "" | "+" => 1.0,
            "-" => -1.0,
            other => other
                .parse::<f64>()
                .map_err(|_| format!("bad coefficient '{other}' before pi"))?,
        };
        let divisor = match t[idx + 2..].trim() {
            "" => 1.0,
            rest => {
                let digits = rest
                    .strip_prefix('/')
                    .ok_or_else(|| format!("unexpected '{rest}' after pi"))?;
                let d: f64 = digits
                    .trim()
                    .parse()
                    .map_err(|_| format!("bad divisor '{digits}'"))?;
                if d == 0.0 {
                    return Err("division by zero in angle".to_string());
                }
                d
            }
        };
        coef * PI / divisor
    } else {
        t.parse::<f64>()
            .map_err(|_| format!("bad angle '{t}' (expected radians or pi/k)"))?
    };
    if !value.is_finite() {
        return Err(format!("angle '{t}' is not finite"));
    }
    Ok(value)
}

/// `x1,y1;x2,y2;...` into integer pairs. Whitespace around numbers is fine.
pub fn parse_factors(s: &str) -> Result<Vec<(i64, i64)>, String> {
    let t = s.trim();
    if t.is_empty() {
        return Err("empty factor list".to_string());
    }
    t.split(';')
        .map(|pair| {
            let (x, y) = pair
                .split_once(',')
                .ok_or_else(|| format!("factor '{pair}' is not of the form x,y"))?;
            let x: i64 = x
                .trim()
                .parse()
                .map_err(|_| format!("bad integer '{}' in factor '{pair}'", x.trim()))?;
            let y: i64 = y
                .trim()
                .parse()
                .map_err(|_| format!("bad integer '{}' in factor '{pair}'", y.trim()))?;
            Ok((x, y))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("1..32").unwrap(), (1, 32));
        assert_eq!(parse_range("7").unwrap(), (7, 7));
        assert!(parse_range("9..2").is_err());
        assert!(parse_range("a..b").is_err());
    }

    #[test]
    fn angles() {
        assert_eq!(parse_angle("pi").unwrap(), PI);
        assert_eq!(parse_angle("pi/6").unwrap(), PI / 6.0);
        assert_eq!(parse_angle("3pi/4").unwrap(), 3.0 * PI / 4.0);
        assert_eq!(parse_angle("-pi/2").unwrap(), -PI / 2.0);
        assert_eq!(parse_angle("2pi").unwrap(), 2.0 * PI);
        assert_eq!(parse_angle("0.25").unwrap(), 0.25);
        assert!(parse_angle("pie").is_err());
        assert!(parse_angle("pi/0").is_err());
        assert!(parse_angle("nan").is_err());
    }

    #[test]
    fn factors() {
        assert_eq!(
            parse_factors("1,1;2,1;3,1").unwrap(),
            vec![(1, 1), (2, 1), (3, 1)]
        );
        assert_eq!(parse_factors(" 3 , -4 ").unwrap(), vec![(3, -4)]);
        assert!(parse_factors("1;2").is_err());
        assert!(parse_factors("").is_err());
        assert!(parse_factors("1,x").is_err());
    }
}
