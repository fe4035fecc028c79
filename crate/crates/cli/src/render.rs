//! Output formats. Every renderer is a pure function of the outcome, so the
//! same input always produces the same bytes.

use lattice_walks::asymptotics::{latex_table, storybook_text};
use lattice_walks::record::{GrandTerm, MomentRecord, ResultRecord};

use crate::{Format, Outcome};

pub fn render(outcome: &Outcome, format: Format) -> String {
    let rec = &outcome.record;
    if format == Format::Json {
        let mut s = serde_json::to_string_pretty(rec).expect("records serialize");
        s.push('\n');
        return s;
    }
    let body = match (&rec.result, format) {
        (ResultRecord::Book(_), Format::Text) => storybook_text(
            outcome
                .book
                .as_ref()
                .expect("book outcome carries the book"),
        ),
        (ResultRecord::Book(_), Format::Latex) => latex_table(
            outcome
                .book
                .as_ref()
                .expect("book outcome carries the book"),
        ),
        (ResultRecord::Book(b), _) => {
            let mut out = format!(
                "steps,{}\n",
                (1..=b.max_moment)
                    .map(|k| k.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            );
            for t in &b.theorems {
                let cells: Vec<String> = t
                    .constants
                    .iter()
                    .map(|c| format!("{}{}", c.display, c.ansatz))
                    .collect();
                out.push_str(&format!("\"{}\",{}\n", t.steps, cells.join(",")));
            }
            out
        }
        (ResultRecord::Polynomial { coefficients }, f) => match f {
            Format::Csv => format!("{}\n", coefficients.join(",")),
            Format::Latex => format!("$F(t) = {}$\n", poly_latex(coefficients)),
            _ => format!("{}\n", poly_text(coefficients)),
        },
        (ResultRecord::Counts { counts }, f) => match f {
            Format::Csv => format!("{}\n", counts.join(",")),
            Format::Latex => {
                let ks: Vec<String> = (0..counts.len()).map(|k| k.to_string()).collect();
                format!(
                    "\\begin{{tabular}}{{c {}}}\n$k$ & {} \\\\\ncount & {} \\\\\n\\end{{tabular}}\n",
                    "c ".repeat(counts.len()).trim_end(),
                    ks.join(" & "),
                    counts.join(" & ")
                )
            }
            _ => counts
                .iter()
                .enumerate()
                .map(|(k, c)| format!("{k}: {c}\n"))
                .collect(),
        },
        (ResultRecord::Series { coefficients, .. }, f) => match f {
            Format::Csv => coefficients
                .iter()
                .enumerate()
                .map(|(k, c)| format!("{k},{}\n", c.join(",")))
                .collect(),
            Format::Latex => coefficients
                .iter()
                .enumerate()
                .map(|(k, c)| format!("$[z^{{{k}}}] = {}$\\\\\n", poly_latex(c)))
                .collect(),
            _ => coefficients
                .iter()
                .enumerate()
                .map(|(k, c)| format!("z^{k}: {}\n", poly_text(c)))
                .collect(),
        },
        (ResultRecord::Moments(m), f) => moments(m, f),
        (ResultRecord::Grand { total, terms }, f) => grand(total, terms, f),
    };
    if format == Format::Text {
        let inputs: Vec<String> = rec.inputs.iter().map(|(k, v)| format!("{k}={v}")).collect();
        format!("# {} {}\n{body}", rec.command, inputs.join(" "))
    } else {
        body
    }
}

fn terms(coeffs: &[String]) -> impl Iterator<Item = (usize, &String)> {
    coeffs.iter().enumerate().filter(|(_, c)| c.as_str() != "0")
}

fn poly_text(coeffs: &[String]) -> String {
    let parts: Vec<String> = terms(coeffs)
        .map(|(k, c)| {
            let c = if c == "1" && k > 0 {
                String::new()
            } else {
                format!("{c}*")
            };
            match k {
                0 => c.trim_end_matches('*').to_string(),
                1 => format!("{c}t"),
                _ => format!("{c}t^{k}"),
            }
        })
        .collect();
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join(" + ")
    }
}

fn poly_latex(coeffs: &[String]) -> String {
    let parts: Vec<String> = terms(coeffs)
        .map(|(k, c)| {
            let c = if c == "1" && k > 0 {
                String::new()
            } else {
                c.clone()
            };
            match k {
                0 => c,
                1 => format!("{c}t"),
                _ => format!("{c}t^{{{k}}}"),
            }
        })
        .collect();
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join(" + ")
    }
}

fn moment_rows(m: &MomentRecord) -> Vec<(String, String, String)> {
    let mut rows = vec![
        ("mass".to_string(), m.mass.clone(), m.mass.clone()),
        ("mean".to_string(), m.mean.clone(), m.mean_decimal.clone()),
        (
            "variance".to_string(),
            m.variance.clone(),
            m.variance_decimal.clone(),
        ),
    ];
    for s in &m.std_moments {
        rows.push((format!("m{}", s.order), s.exact.clone(), s.decimal.clone()));
    }
    rows
}

fn moments(m: &MomentRecord, format: Format) -> String {
    let rows = moment_rows(m);
    match format {
        Format::Csv => {
            let mut out = "quantity,exact,decimal\n".to_string();
            for (q, e, d) in rows {
                out.push_str(&format!("{q},{e},{d}\n"));
            }
            out
        }
        Format::Latex => {
            let mut out =
                "\\begin{tabular}{l l l}\nquantity & exact & decimal \\\\\n\\hline\n".to_string();
            for (q, e, d) in rows {
                out.push_str(&format!(
                    "{q} & ${}$ & {d} \\\\\n",
                    e.replace("sqrt(", "\\sqrt{").replace(')', "}")
                ));
            }
            out.push_str("\\end{tabular}\n");
            out
        }
        _ => {
            let mut out = String::new();
            for (q, e, d) in rows {
                if e == d {
                    out.push_str(&format!("{q}: {e}\n"));
                } else {
                    out.push_str(&format!("{q}: {e} = {d}\n"));
                }
            }
            if m.degenerate {
                out.push_str("variance is zero; standardized moments are undefined\n");
            }
            out
        }
    }
}

fn grand(total: &str, terms: &[GrandTerm], format: Format) -> String {
    match format {
        Format::Csv => {
            let mut out = "a1,a2,a3,a4,count\n".to_string();
            for t in terms {
                let [a, b, c, d] = t.exponents;
                out.push_str(&format!("{a},{b},{c},{d},{}\n", t.count));
            }
            out
        }
        Format::Latex => {
            let mut out = "\\begin{tabular}{c c c c r}\n$a_1$ & $a_2$ & $a_3$ & $a_4$ & count \\\\\n\\hline\n".to_string();
            for t in terms {
                let [a, b, c, d] = t.exponents;
                out.push_str(&format!("{a} & {b} & {c} & {d} & {} \\\\\n", t.count));
            }
            out.push_str("\\end{tabular}\n");
            out
        }
        _ => {
            let mut out = format!("total: {total}\n");
            for t in terms {
                let [a, b, c, d] = t.exponents;
                out.push_str(&format!("t1^{a} t2^{b} t3^{c} t4^{d}: {}\n", t.count));
            }
            out
        }
    }
}
