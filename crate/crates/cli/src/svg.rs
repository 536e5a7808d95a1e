//! Minimal scatter plot: pair points on unit axes, one filled circle per
//! pair, coordinates normalized by the largest value present.

pub fn scatter_svg(pairs: &[(usize, usize)]) -> String {
    let max = pairs
        .iter()
        .flat_map(|&(x, y)| [x, y])
        .max()
        .unwrap_or(0)
        .max(1) as f64;
    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    out.push_str(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"480\" height=\"480\" \
         viewBox=\"-0.06 -0.06 1.12 1.12\">\n",
    );
    // Unit axes: x along the bottom, y up the left edge (SVG y points down).
    out.push_str(
        "  <line x1=\"0\" y1=\"1\" x2=\"1\" y2=\"1\" stroke=\"black\" stroke-width=\"0.004\"/>\n",
    );
    out.push_str(
        "  <line x1=\"0\" y1=\"0\" x2=\"0\" y2=\"1\" stroke=\"black\" stroke-width=\"0.004\"/>\n",
    );
    for &(x, y) in pairs {
        let cx = x as f64 / max;
        let cy = 1.0 - y as f64 / max;
        out.push_str(&format!(
            "  <circle cx=\"{cx:.6}\" cy=\"{cy:.6}\" r=\"0.012\" fill=\"black\"/>\n"
        ));
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_circle_per_pair() {
        let svg = scatter_svg(&[(2, 0), (0, 18), (26, 13)]);
        assert_eq!(svg.matches("<circle").count(), 3);
        assert!(svg.starts_with("<?xml"));
        assert!(svg.trim_end().ends_with("</svg>"));
    }

    #[test]
    fn empty_input_is_axes_only() {
        let svg = scatter_svg(&[]);
        assert_eq!(svg.matches("<circle").count(), 0);
        assert_eq!(svg.matches("<line").count(), 2);
    }

    #[test]
    fn coordinates_stay_in_unit_square() {
        let svg = scatter_svg(&[(0, 0), (26, 26), (13, 5)]);
        for token in svg.split_whitespace() {
            if let Some(v) = token
                .strip_prefix("cx=\"")
                .or_else(|| token.strip_prefix("cy=\""))
            {
                let v: f64 = v.trim_end_matches('"').parse().unwrap();
                assert!((0.0..=1.0).contains(&v), "{token}");
            }
        }
    }
}
