use super::expr::{FunctionExpr, Term, MAX_DEGREE, MAX_TERMS};
use super::{MotionSpec, Parameter, SpecError};

const SECTIONS: [&str; 3] = ["o.x", "o.y", "theta"];

fn syntax(line: usize, col: usize, message: impl Into<String>) -> SpecError {
    SpecError::Syntax { line, col, message: message.into() }
}

fn invalid(field: &str, reason: impl Into<String>) -> SpecError {
    SpecError::Validation { field: field.to_string(), reason: reason.into() }
}

/// Whitespace-separated tokens with their 1-based character columns.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start: Option<usize> = None;
    for (i, c) in line.char_indices() {
        match (c.is_whitespace(), start) {
            (true, Some(s)) => {
                out.push((s, &line[s..i]));
                start = None;
            }
            (false, None) => start = Some(i),
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s, &line[s..]));
    }
    out.into_iter().map(|(b, t)| (line[..b].chars().count() + 1, t)).collect()
}

fn col_of(line: &str, byte: usize) -> usize {
    line[..byte].chars().count() + 1
}

fn number(tok: &str, line: usize, col: usize) -> Result<f64, SpecError> {
    tok.parse::<f64>().map_err(|_| syntax(line, col, format!("invalid number `{tok}`")))
}

#[derive(Default)]
struct Keys {
    name: Option<String>,
    parameter: Option<Parameter>,
    char_length: Option<f64>,
}

/// Parses and validates a motion file.
///
/// Errors are reported for the first offending line; validation of the
/// document as a whole (missing keys or sections) follows afterwards.
pub fn parse_spec(text: &str) -> Result<MotionSpec, SpecError> {
    let mut keys = Keys::default();
    let mut sections: [Option<Vec<Term>>; 3] = [None, None, None];
    let mut current: Option<usize> = None;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let body = raw.split('#').next().unwrap_or("");
        let trimmed = body.trim();
        if trimmed.is_empty() {
            continue;
        }
        let lead = body.len() - body.trim_start().len();
        let col0 = col_of(body, lead);

        if trimmed.starts_with('[') {
            if !trimmed.ends_with(']') {
                return Err(syntax(line, col0 + trimmed.chars().count(), "expected `]`"));
            }
            let name = trimmed[1..trimmed.len() - 1].trim();
            let Some(i) = SECTIONS.iter().position(|s| *s == name) else {
                return Err(syntax(line, col0, format!("unknown section `[{name}]`")));
            };
            if sections[i].is_some() {
                return Err(syntax(line, col0, format!("duplicate section `[{name}]`")));
            }
            sections[i] = Some(Vec::new());
            current = Some(i);
            continue;
        }

        if let Some(eq) = body.find('=') {
            if current.is_some() {
                return Err(syntax(line, col0, "keys must precede the first section"));
            }
            let key = body[..eq].trim();
            let value = body[eq + 1..].trim();
            let vcol = col_of(body, eq + 1 + (body[eq + 1..].len() - body[eq + 1..].trim_start().len()));
            match key {
                "name" => {
                    if keys.name.is_some() {
                        return Err(syntax(line, col0, "duplicate key `name`"));
                    }
                    if value.is_empty() {
                        return Err(invalid("name", "must not be empty"));
                    }
                    if value.chars().any(char::is_control) {
                        return Err(invalid("name", "must not contain control characters"));
                    }
                    keys.name = Some(value.to_string());
                }
                "parameter" => {
                    if keys.parameter.is_some() {
                        return Err(syntax(line, col0, "duplicate key `parameter`"));
                    }
                    keys.parameter = Some(match value {
                        "time" => Parameter::Time,
                        "angle" => Parameter::Angle,
                        _ => return Err(invalid("parameter", format!("expected `time` or `angle`, found `{value}`"))),
                    });
                }
                "char_length" => {
                    if keys.char_length.is_some() {
                        return Err(syntax(line, col0, "duplicate key `char_length`"));
                    }
                    let v = number(value, line, vcol)?;
                    if !v.is_finite() || v <= 0.0 {
                        return Err(invalid("char_length", "must be a positive finite number"));
                    }
                    keys.char_length = Some(v);
                }
                _ => return Err(syntax(line, col0, format!("unknown key `{key}`"))),
            }
            continue;
        }

        let Some(sec) = current else {
            return Err(syntax(line, col0, "term outside of a section"));
        };
        let toks = tokens(body);
        let (kcol, kind) = toks[0];
        let mut nums = Vec::with_capacity(toks.len() - 1);
        for &(c, t) in &toks[1..] {
            nums.push(number(t, line, c)?);
        }
        let field = SECTIONS[sec];
        let terms = sections[sec].as_mut().expect("current section exists");
        let n = terms.len() + 1;
        if nums.iter().any(|x| !x.is_finite()) {
            return Err(invalid(field, format!("term {n}: coefficients must be finite")));
        }
        let term = match kind {
            "poly" => {
                if nums.is_empty() {
                    return Err(invalid(field, format!("term {n}: `poly` needs at least one coefficient")));
                }
                if nums.len() > MAX_DEGREE + 1 {
                    return Err(invalid(field, format!("term {n}: polynomial degree exceeds {MAX_DEGREE}")));
                }
                Term::Poly { coeffs: nums }
            }
            "sin" | "cos" => {
                if nums.len() != 3 {
                    return Err(invalid(field, format!("term {n}: `{kind}` takes amplitude, frequency and phase")));
                }
                let (amp, freq, phase) = (nums[0], nums[1], nums[2]);
                if kind == "sin" {
                    Term::Sin { amp, freq, phase }
                } else {
                    Term::Cos { amp, freq, phase }
                }
            }
            _ => return Err(syntax(line, kcol, format!("unknown term kind `{kind}`"))),
        };
        if terms.len() == MAX_TERMS {
            return Err(invalid(field, format!("more than {MAX_TERMS} terms")));
        }
        terms.push(term);
    }

    let name = keys.name.ok_or_else(|| invalid("name", "missing"))?;
    let parameter = keys.parameter.unwrap_or(Parameter::Time);
    let [ox, oy, theta] = sections;
    let ox = ox.ok_or_else(|| invalid("o.x", "missing section"))?;
    let oy = oy.ok_or_else(|| invalid("o.y", "missing section"))?;
    let theta = match (parameter, theta) {
        (Parameter::Time, Some(t)) => t,
        (Parameter::Time, None) => return Err(invalid("theta", "missing section (required for parameter = time)")),
        (Parameter::Angle, Some(_)) => return Err(invalid("theta", "not allowed for parameter = angle")),
        (Parameter::Angle, None) => Vec::new(),
    };
    Ok(MotionSpec {
        name,
        parameter,
        char_length: keys.char_length.unwrap_or(1.0),
        o_x: FunctionExpr::new(ox),
        o_y: FunctionExpr::new(oy),
        theta: FunctionExpr::new(theta),
    })
}
