//! Static SVG charts of summary rows: mean fraction versus gamma with
//! standard-error bars, one series per model. No external assets, no
//! scripting — the output is a self-contained file.

use crate::experiment::{MeanStderr, ModelKind, SummaryRow};
use std::fmt;
use std::path::Path;
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum PlotError {
    #[error("no rows to plot")]
    EmptyRows,
    #[error("no row carries the requested quantity {0}")]
    MissingQuantity(PlotQuantity),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

/// Which aggregated fraction the chart shows.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PlotQuantity {
    Z,
    V,
    DeltaZ,
    DeltaV,
}

impl PlotQuantity {
    fn extract(&self, row: &SummaryRow) -> Option<MeanStderr> {
        match self {
            PlotQuantity::Z => row.z_lm,
            PlotQuantity::V => row.v_lm,
            PlotQuantity::DeltaZ => row.delta_z,
            PlotQuantity::DeltaV => row.delta_v,
        }
    }

    fn axis_label(&self) -> &'static str {
        match self {
            PlotQuantity::Z => "mean z_lm / N",
            PlotQuantity::V => "mean v_lm / N",
            PlotQuantity::DeltaZ => "mean delta_z / N",
            PlotQuantity::DeltaV => "mean delta_v / N",
        }
    }
}

impl fmt::Display for PlotQuantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            PlotQuantity::Z => "z",
            PlotQuantity::V => "v",
            PlotQuantity::DeltaZ => "delta_z",
            PlotQuantity::DeltaV => "delta_v",
        };
        f.write_str(s)
    }
}

impl FromStr for PlotQuantity {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "z" => Ok(PlotQuantity::Z),
            "v" => Ok(PlotQuantity::V),
            "delta_z" => Ok(PlotQuantity::DeltaZ),
            "delta_v" => Ok(PlotQuantity::DeltaV),
            other => Err(format!(
                "unknown quantity {other:?}, expected z, v, delta_z or delta_v"
            )),
        }
    }
}

const WIDTH: f64 = 640.0;
const HEIGHT: f64 = 440.0;
const MARGIN_LEFT: f64 = 70.0;
const MARGIN_RIGHT: f64 = 24.0;
const MARGIN_TOP: f64 = 28.0;
const MARGIN_BOTTOM: f64 = 52.0;
/// Fractions live in [0, 1]; the axis tops out at 1.05 to keep markers off
/// the frame.
const Y_MAX: f64 = 1.05;
const PALETTE: [&str; 2] = ["#1f77b4", "#d62728"];

/// Renders the chart as an SVG document string.
pub fn render_plot(rows: &[SummaryRow], quantity: PlotQuantity) -> Result<String, PlotError> {
    if rows.is_empty() {
        return Err(PlotError::EmptyRows);
    }
    let mut models: Vec<ModelKind> = Vec::new();
    for r in rows {
        if !models.contains(&r.model) {
            models.push(r.model);
        }
    }
    let series: Vec<(ModelKind, Vec<(f64, MeanStderr)>)> = models
        .iter()
        .map(|&model| {
            let mut pts: Vec<(f64, MeanStderr)> = rows
                .iter()
                .filter(|r| r.model == model)
                .filter_map(|r| quantity.extract(r).map(|m| (r.gamma, m)))
                .collect();
            pts.sort_by(|a, b| a.0.total_cmp(&b.0));
            (model, pts)
        })
        .filter(|(_, pts)| !pts.is_empty())
        .collect();
    if series.is_empty() {
        return Err(PlotError::MissingQuantity(quantity));
    }

    let xs: Vec<f64> = series
        .iter()
        .flat_map(|(_, pts)| pts.iter().map(|p| p.0))
        .collect();
    let x_min = xs.iter().copied().fold(f64::INFINITY, f64::min);
    let x_max = xs.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let (x_min, x_max) = if x_max > x_min {
        (x_min, x_max)
    } else {
        (x_min - 0.5, x_max + 0.5)
    };
    let plot_w = WIDTH - MARGIN_LEFT - MARGIN_RIGHT;
    let plot_h = HEIGHT - MARGIN_TOP - MARGIN_BOTTOM;
    let px = |x: f64| MARGIN_LEFT + (x - x_min) / (x_max - x_min) * plot_w;
    let py = |y: f64| MARGIN_TOP + (1.0 - y.clamp(0.0, Y_MAX) / Y_MAX) * plot_h;

    let mut svg = String::new();
    svg.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{WIDTH}\" height=\"{HEIGHT}\" \
         viewBox=\"0 0 {WIDTH} {HEIGHT}\" font-family=\"sans-serif\" font-size=\"12\">\n"
    ));
    svg.push_str(&format!(
        "<rect width=\"{WIDTH}\" height=\"{HEIGHT}\" fill=\"white\"/>\n"
    ));

    // frame
    svg.push_str(&format!(
        "<rect x=\"{MARGIN_LEFT}\" y=\"{MARGIN_TOP}\" width=\"{plot_w}\" height=\"{plot_h}\" \
         fill=\"none\" stroke=\"#333\"/>\n"
    ));

    // y ticks and grid
    for i in 0..=4 {
        let y = i as f64 * 0.25;
        let cy = py(y);
        svg.push_str(&format!(
            "<line x1=\"{:.1}\" y1=\"{cy:.1}\" x2=\"{:.1}\" y2=\"{cy:.1}\" stroke=\"#ddd\"/>\n",
            MARGIN_LEFT,
            MARGIN_LEFT + plot_w
        ));
        svg.push_str(&format!(
            "<text x=\"{:.1}\" y=\"{:.1}\" text-anchor=\"end\">{y:.2}</text>\n",
            MARGIN_LEFT - 8.0,
            cy + 4.0
        ));
    }

    // x ticks at the data abscissae (deduplicated)
    let mut ticks: Vec<f64> = xs.clone();
    ticks.sort_by(f64::total_cmp);
    ticks.dedup_by(|a, b| (*a - *b).abs() < 1e-12);
    for &x in &ticks {
        let cx = px(x);
        svg.push_str(&format!(
            "<line x1=\"{cx:.1}\" y1=\"{:.1}\" x2=\"{cx:.1}\" y2=\"{:.1}\" stroke=\"#333\"/>\n",
            MARGIN_TOP + plot_h,
            MARGIN_TOP + plot_h + 5.0
        ));
        svg.push_str(&format!(
            "<text x=\"{cx:.1}\" y=\"{:.1}\" text-anchor=\"middle\">{x:.2}</text>\n",
            MARGIN_TOP + plot_h + 18.0
        ));
    }

    // axis labels
    svg.push_str(&format!(
        "<text x=\"{:.1}\" y=\"{:.1}\" text-anchor=\"middle\">gamma</text>\n",
        MARGIN_LEFT + plot_w / 2.0,
        HEIGHT - 12.0
    ));
    svg.push_str(&format!(
        "<text x=\"16\" y=\"{:.1}\" text-anchor=\"middle\" transform=\"rotate(-90 16 {:.1})\">{}</text>\n",
        MARGIN_TOP + plot_h / 2.0,
        MARGIN_TOP + plot_h / 2.0,
        quantity.axis_label()
    ));

    for (si, (model, pts)) in series.iter().enumerate() {
        let colour = PALETTE[si % PALETTE.len()];
        // error bars first so markers draw on top
        for &(x, m) in pts {
            let cx = px(x);
            let y_lo = py(m.mean - m.stderr);
            let y_hi = py(m.mean + m.stderr);
            svg.push_str(&format!(
                "<line class=\"errbar\" x1=\"{cx:.1}\" y1=\"{y_hi:.1}\" x2=\"{cx:.1}\" \
                 y2=\"{y_lo:.1}\" stroke=\"{colour}\"/>\n"
            ));
        }
        let path: Vec<String> = pts
            .iter()
            .map(|&(x, m)| format!("{:.1},{:.1}", px(x), py(m.mean)))
            .collect();
        svg.push_str(&format!(
            "<polyline points=\"{}\" fill=\"none\" stroke=\"{colour}\" stroke-width=\"1.5\"/>\n",
            path.join(" ")
        ));
        for &(x, m) in pts {
            svg.push_str(&format!(
                "<circle class=\"marker\" cx=\"{:.1}\" cy=\"{:.1}\" r=\"3.5\" fill=\"{colour}\"/>\n",
                px(x),
                py(m.mean)
            ));
        }
        // legend entry
        let ly = MARGIN_TOP + 14.0 + si as f64 * 18.0;
        let lx = MARGIN_LEFT + plot_w - 130.0;
        svg.push_str(&format!(
            "<rect class=\"legend\" x=\"{lx:.1}\" y=\"{:.1}\" width=\"12\" height=\"12\" fill=\"{colour}\"/>\n",
            ly - 10.0
        ));
        svg.push_str(&format!(
            "<text x=\"{:.1}\" y=\"{ly:.1}\">{model}</text>\n",
            lx + 18.0
        ));
    }

    svg.push_str("</svg>\n");
    Ok(svg)
}

/// Renders and writes the chart to `path`.
pub fn emit_plot(
    rows: &[SummaryRow],
    quantity: PlotQuantity,
    path: &Path,
) -> Result<(), PlotError> {
    let svg = render_plot(rows, quantity)?;
    std::fs::write(path, svg)?;
    Ok(())
}
