//! One function per subcommand; each returns the artifact text and whether
//! the command's own checks passed.

use fockcanon::fock::QuadratureRule;
use fockcanon::group::cocycle;
use fockcanon::hermite::{generalized_hermite, generalized_hermite_recursive};
use fockcanon::kernel::kernel_compose;
use fockcanon::lct::{frft_transform, hermite_gaussian, lct_transform, LineGrid};
use fockcanon::operator::{classify, hs_norm_sq};
use fockcanon::spectral::disk_points;
use fockcanon::{
    CanonicalKernel, CanonicalOperator, Complex64, GroupElement, MatrixMethod, OperatorClass, RealMatrix2,
    SampledRealFunction, SpectralData,
};
use serde_json::Value;

use crate::args::{Cli, Command, Format, GlobalOpts, Method, Params};
use crate::error::CliError;
use crate::formats::{cnum, matrix_csv, matrix_json, num, object, read_samples, samples_csv, samples_json, to_json};
use crate::verify::{self, VerifyConfig, RESIDUAL_OUTER_NODES};

/// Validated run-wide settings.
#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    pub nodes: usize,
    pub radius: Option<f64>,
    pub truncation: usize,
    pub tol: f64,
    pub seed: u64,
}

impl RunConfig {
    pub fn from_opts(g: &GlobalOpts) -> Result<Self, CliError> {
        if g.nodes < 16 {
            return Err(CliError::Usage(format!("--nodes must be at least 16, got {}", g.nodes)));
        }
        if g.truncation < 8 {
            return Err(CliError::Usage(format!(
                "--truncation must be at least 8, got {}",
                g.truncation
            )));
        }
        if !(g.tol > 0.0 && g.tol.is_finite()) {
            return Err(CliError::Usage("--tol must be positive".into()));
        }
        Ok(RunConfig {
            nodes: g.nodes,
            radius: g.radius,
            truncation: g.truncation,
            tol: g.tol,
            seed: g.seed,
        })
    }

    pub fn rule(&self) -> Result<QuadratureRule, CliError> {
        Ok(match self.radius {
            Some(r) => QuadratureRule::with_radius(self.nodes, r)?,
            None => QuadratureRule::new(self.nodes)?,
        })
    }

    /// The configured rule, or the kernel-sized one if that is finer.
    fn operator_rule(&self, g: &GroupElement) -> Result<QuadratureRule, CliError> {
        let sized = QuadratureRule::for_kernel(g)?;
        if sized.node_count() > self.nodes && self.radius.is_none() {
            Ok(sized)
        } else {
            self.rule()
        }
    }
}

/// Command output: the artifact and whether it reports success.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub text: String,
    pub pass: bool,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { text, pass: true }
    }
}

pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    let cfg = RunConfig::from_opts(&cli.global)?;
    let format = cli.global.format;
    match &cli.command {
        Command::Classify(p) => classify_cmd(p),
        Command::Kernel { params, z, w, ray } => kernel_cmd(params, *z, *w, ray),
        Command::Matrix { params, method } => matrix_cmd(&cfg, params, *method, format.unwrap_or(Format::Json)),
        Command::Eigen {
            params,
            nmax,
            norm_residual,
        } => eigen_cmd(&cfg, params, *nmax, *norm_residual),
        Command::Compose { s1, t1, s2, t2 } => compose_cmd(*s1, *t1, *s2, *t2),
        Command::Lct {
            matrix,
            frft,
            fresnel,
            chirp,
            dilate,
            input,
            preset,
            half_width,
            points,
        } => {
            let f = match input {
                Some(path) => read_samples(path)?,
                None => preset_samples(preset, *half_width, *points)?,
            };
            let out = if let Some(alpha) = frft {
                frft_transform(*alpha, &f)?
            } else {
                let a = match (matrix, fresnel, chirp, dilate) {
                    (Some(m), ..) => *m,
                    (_, Some(b), ..) => RealMatrix2::fresnel(*b),
                    (_, _, Some(c), _) => RealMatrix2::chirp(*c),
                    (.., Some(r)) => {
                        if !(*r > 0.0) {
                            return Err(CliError::Usage("--dilate must be positive".into()));
                        }
                        RealMatrix2::dilation(*r)
                    }
                    _ => return Err(CliError::Usage("one transform must be given".into())),
                };
                lct_transform(&a, &f)?
            };
            Ok(Outcome::ok(match format.unwrap_or(Format::Csv) {
                Format::Csv => samples_csv(&out)?,
                Format::Json => to_json(&samples_json(&out)),
            }))
        }
        Command::Hermite { n, delta, recursive } => {
            let p = if *recursive {
                generalized_hermite_recursive(*n, *delta)?
            } else {
                generalized_hermite(*n, *delta)?
            };
            Ok(Outcome::ok(to_json(&object([
                ("n", Value::from(*n as u64)),
                ("delta", cnum(*delta)),
                (
                    "coefficients",
                    Value::Array(p.coeffs().iter().map(|&c| cnum(c)).collect()),
                ),
            ]))))
        }
        Command::VerifyIntegralEquation => report(&cfg, &[6], format),
        Command::Verify { only } => report(&cfg, only, format),
    }
}

fn group(p: &Params) -> GroupElement {
    GroupElement::pair(p.s, p.t)
}

fn params_json(g: &GroupElement) -> [(&'static str, Value); 3] {
    [("s", cnum(g.s())), ("t", cnum(g.t())), ("det", num(g.det()))]
}

fn classify_cmd(p: &Params) -> Result<Outcome, CliError> {
    let g = group(p);
    let class = classify(&g)?;
    let mut fields: Vec<(&str, Value)> = params_json(&g).into();
    fields.push(("class", Value::String(class.name().into())));
    if class == OperatorClass::HilbertSchmidt {
        fields.push(("hs_norm_sq", num(hs_norm_sq(&g)?)));
    }
    Ok(Outcome::ok(to_json(&object(fields))))
}

fn kernel_cmd(p: &Params, z: Option<Complex64>, w: Option<Complex64>, ray: &[f64]) -> Result<Outcome, CliError> {
    let g = group(p);
    let k = CanonicalKernel::new(g)?;
    let mut fields: Vec<(&str, Value)> = params_json(&g).into();
    fields.push(("sign", Value::from(k.sign()?.as_i8())));
    fields.push(("in_fock", Value::Bool(k.in_fock())));
    if let (Some(z), Some(w)) = (z, w) {
        fields.push(("value", cnum(k.eval(z, w))));
    }
    if let Some(w) = w {
        if k.in_fock() {
            fields.push(("ln_norm_at_w", num(k.ln_norm(w)?)));
        }
    }
    if !ray.is_empty() {
        let mut rows = Vec::new();
        for &r in ray {
            let (ln_ratio, theta) = k.growth_along_ray(r)?;
            rows.push(object([
                ("radius", num(r)),
                ("theta", num(theta)),
                ("ln_ratio", num(ln_ratio)),
                ("ratio", num(ln_ratio.exp())),
            ]));
        }
        fields.push(("growth", Value::Array(rows)));
    }
    Ok(Outcome::ok(to_json(&object(fields))))
}

fn matrix_cmd(cfg: &RunConfig, p: &Params, method: Method, format: Format) -> Result<Outcome, CliError> {
    let g = group(p);
    let op = CanonicalOperator::new(g)?;
    let m = match method {
        Method::Closed => op.matrix(cfg.truncation, &MatrixMethod::ClosedForm)?,
        Method::Quadrature => op.matrix(cfg.truncation, &MatrixMethod::Quadrature(cfg.operator_rule(&g)?))?,
    };
    Ok(Outcome::ok(match format {
        Format::Csv => matrix_csv(&m)?,
        Format::Json => {
            let mut fields: Vec<(&str, Value)> = params_json(&g).into();
            fields.push(("truncation", Value::from(cfg.truncation as u64)));
            fields.push(("entries", matrix_json(&m)));
            to_json(&object(fields))
        }
    }))
}

/// Largest `||s|² − |t|² − 1|` the eigen command rounds onto SL(ℂ×ℂ), so
/// that parameters typed to a few digits (e.g. s = 1.41421356i) are usable.
const SL_INPUT_TOL: f64 = 1e-6;

/// Rescales `|s|` to `√(1 + |t|²)`, keeping its argument.
fn project_sl(p: &Params) -> Result<(GroupElement, f64), CliError> {
    let defect = p.s.norm_sqr() - p.t.norm_sqr() - 1.0;
    if defect.abs() > SL_INPUT_TOL || p.s.norm() == 0.0 {
        // let the core produce its usual error
        return Ok((GroupElement::sl(p.s, p.t)?, defect));
    }
    let s = Complex64::from_polar((1.0 + p.t.norm_sqr()).sqrt(), p.s.arg());
    Ok((GroupElement::sl(s, p.t)?, defect))
}

fn eigen_cmd(cfg: &RunConfig, p: &Params, nmax: usize, norm_residual: bool) -> Result<Outcome, CliError> {
    let (g, defect) = project_sl(p)?;
    let data = SpectralData::new(g)?;
    let inner = cfg.operator_rule(&g)?;
    let outer = QuadratureRule::new(RESIDUAL_OUTER_NODES)?;
    let points = disk_points(20, 1.5);
    let mut pass = true;
    let mut rows = Vec::new();
    for n in 0..=nmax {
        let lambda = data.eigenvalue(n);
        let pointwise = data.eigen_residual(n, &points, &inner)?;
        let mut row = vec![
            ("n", Value::from(n as u64)),
            ("lambda", cnum(lambda)),
            ("residual_pointwise", num(pointwise)),
        ];
        pass &= pointwise <= cfg.tol;
        if norm_residual {
            let r = data.eigen_residual_norm(n, &outer, &inner)?;
            pass &= r <= cfg.tol;
            row.push(("residual_norm", num(r)));
        }
        rows.push(object(row));
    }
    let mut fields: Vec<(&str, Value)> = params_json(&g).into();
    fields.extend([
        ("gamma", cnum(data.gamma())),
        ("kappa", cnum(data.kappa())),
        ("rho_sq", cnum(data.rho_sq())),
        ("input_sl_defect", num(defect)),
        (
            "resonance",
            data.resonance().map_or(Value::Null, |r| Value::from(r as u64)),
        ),
        ("tolerance", num(cfg.tol)),
        ("pass", Value::Bool(pass)),
        ("eigenpairs", Value::Array(rows)),
    ]);
    Ok(Outcome {
        text: to_json(&object(fields)),
        pass,
    })
}

fn compose_cmd(s1: Complex64, t1: Complex64, s2: Complex64, t2: Complex64) -> Result<Outcome, CliError> {
    let (g1, g2) = (GroupElement::gl(s1, t1)?, GroupElement::gl(s2, t2)?);
    let product = g1.compose(&g2)?;
    let mut fields = vec![("product", object(params_json(&product)))];
    if g1.is_sl() && g2.is_sl() {
        fields.push(("cocycle", Value::from(cocycle(&g1, &g2)?.as_i8())));
    }
    if let Ok(kc) = kernel_compose(&g1, &g2) {
        fields.push(("kernel_sign", Value::from(kc.sign.as_i8())));
        fields.push(("z2_coeff", cnum(kc.z2_coeff)));
        fields.push(("ubar2_coeff", cnum(kc.ubar2_coeff)));
    }
    Ok(Outcome::ok(to_json(&object(fields))))
}

fn preset_samples(preset: &str, half_width: f64, points: usize) -> Result<SampledRealFunction, CliError> {
    if !(half_width > 0.0 && half_width.is_finite()) {
        return Err(CliError::Usage("--half-width must be positive".into()));
    }
    let grid = LineGrid { half_width, points };
    let template = grid.template()?;
    if preset == "gaussian" {
        return Ok(template.resample(|x| Complex64::new((-x * x).exp(), 0.0))?);
    }
    if let Some(n) = preset.strip_prefix("hermite:") {
        let n: usize = n
            .parse()
            .map_err(|_| CliError::Usage(format!("bad preset {preset:?}")))?;
        let h = hermite_gaussian(n)?;
        return Ok(template.resample(h)?);
    }
    Err(CliError::Usage(format!(
        "unknown preset {preset:?}; use gaussian or hermite:n"
    )))
}

fn report(cfg: &RunConfig, criteria: &[u8], format: Option<Format>) -> Result<Outcome, CliError> {
    let vc = VerifyConfig {
        seed: cfg.seed,
        nodes: cfg.nodes,
    };
    let r = verify::run(&vc, criteria)?;
    let text = match format.unwrap_or(Format::Json) {
        Format::Json => r.to_json(),
        Format::Csv => r.to_csv()?,
    };
    Ok(Outcome { text, pass: r.passed() })
}
