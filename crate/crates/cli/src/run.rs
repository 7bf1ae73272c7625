use pointed_hopf::algebra::Fault;
use pointed_hopf::identities::AssocMode;
use pointed_hopf::radext::Analysis;
use pointed_hopf::report::{Report, Status};
use pointed_hopf::suites::{self, LabelledCover};
use pointed_hopf::{Algebra, AlgebraSpec, Error, FieldCtx, Result};
use serde::Serialize;
use serde_json::{json, Value};

use crate::{AssocArg, Cli, Command, FaultArg};

#[derive(Serialize)]
pub struct Instance {
    pub p: u32,
    pub s: u32,
    pub t: u32,
    pub lambda: String,
    pub mu: String,
    pub dim: Option<usize>,
}

/// Checks grouped by the suite that produced them.
pub struct Output {
    pub instance: Instance,
    pub sections: Vec<(&'static str, Report)>,
}

impl Output {
    pub fn has_failure(&self) -> bool {
        self.sections.iter().any(|(_, r)| r.has_failure())
    }
}

fn spec_from(cli: &Cli) -> Result<AlgebraSpec> {
    let field = FieldCtx::new(cli.p, cli.t)?;
    let lambda = field.parse_scalar(&cli.lambda)?;
    let mu = field.parse_scalar(&cli.mu)?;
    let mut spec = AlgebraSpec::new(field, cli.s, lambda, mu)?;
    spec.fault = cli.inject_fault.map(|FaultArg::DropGroupCommutator| Fault::DropGroupCommutator);
    Ok(spec)
}

/// Errors that describe a configuration problem rather than a failed check.
fn is_config_error(e: &Error) -> bool {
    matches!(
        e,
        Error::NotPrime(_)
            | Error::CharDividesOrder { .. }
            | Error::BadScalar(_)
            | Error::InvalidSpec(_)
            | Error::OutOfRange(_)
    )
}

struct Runner<'a> {
    cli: &'a Cli,
    h: &'a Algebra,
    sections: Vec<(&'static str, Report)>,
    analysis: Option<Analysis<'a>>,
    covers: Option<Vec<LabelledCover>>,
}

impl<'a> Runner<'a> {
    fn analysis(&mut self) -> Result<&Analysis<'a>> {
        if self.analysis.is_none() {
            self.analysis = Some(Analysis::new(self.h)?);
        }
        Ok(self.analysis.as_ref().expect("just set"))
    }

    fn covers(&mut self) -> Result<(&Analysis<'a>, &[LabelledCover])> {
        self.analysis()?;
        let an = self.analysis.as_ref().expect("computed");
        let covers = self.covers.get_or_insert_with(|| suites::projective_covers(an, self.cli.seed));
        Ok((an, covers))
    }

    fn push(&mut self, name: &'static str, r: Report) -> bool {
        let failed = r.has_failure();
        self.sections.push((name, r));
        !failed
    }

    fn assoc_mode(&self) -> Option<AssocMode> {
        match self.cli.assoc {
            AssocArg::Off => None,
            AssocArg::Full => Some(AssocMode::Full),
            AssocArg::Sampled => Some(AssocMode::Sampled { seed: self.cli.seed, triples: self.cli.assoc_triples }),
        }
    }

    fn symmetric(&self) -> bool {
        self.sections.iter().find_map(|(_, r)| r.get("symmetric")).map_or_else(
            || pointed_hopf::hopf::symmetric_verdict(self.h, self.cli.seed).symmetric,
            |c| c.status == Status::Pass,
        )
    }

    /// Runs one suite; returns false on a structural failure.
    fn suite(&mut self, cmd: &Command) -> Result<bool> {
        let h = self.h;
        let seed = self.cli.seed;
        Ok(match cmd {
            Command::VerifyAlgebra => {
                let r = suites::algebra_suite(h, self.assoc_mode());
                self.push("algebra", r)
            }
            Command::VerifyHopf => self.push("hopf", suites::hopf_suite(h)),
            Command::Integrals => self.push("integrals", suites::integrals_suite(h, seed)),
            Command::Blocks => {
                let an = self.analysis()?;
                let r = suites::blocks_suite(h, Some(an))?;
                self.push("blocks", r)
            }
            Command::Simples => self.push("simples", suites::simples_suite(h)?),
            Command::Radical => {
                let r = suites::radical_suite(self.analysis()?);
                self.push("radical", r)
            }
            Command::Projectives => {
                let (an, covers) = self.covers()?;
                let r = suites::projectives_suite(an, covers)?;
                self.push("projectives", r)
            }
            Command::Ext => {
                let (an, covers) = self.covers()?;
                let r = suites::ext_suite(an, covers);
                self.push("ext", r)
            }
            Command::Tensor { i, j } => {
                let r = suites::tensor_suite(self.analysis()?, *i, *j, seed)?;
                self.push("tensor", r)
            }
            Command::Wildness => {
                let symmetric = self.symmetric();
                let r = suites::wildness_suite(self.analysis()?, symmetric);
                self.push("wildness", r)
            }
            Command::Report => {
                let order = [
                    Command::VerifyAlgebra,
                    Command::VerifyHopf,
                    Command::Integrals,
                    Command::Blocks,
                    Command::Simples,
                    Command::Radical,
                    Command::Projectives,
                    Command::Ext,
                    Command::Wildness,
                ];
                for c in &order {
                    let ok = self.suite(c)?;
                    if !ok && matches!(c, Command::VerifyAlgebra | Command::VerifyHopf | Command::Blocks) {
                        return Ok(false);
                    }
                }
                true
            }
        })
    }
}

pub fn run(cli: &Cli) -> Result<Output> {
    let spec = spec_from(cli)?;
    let f = spec.field.clone();
    let mut instance = Instance {
        p: spec.p,
        s: spec.s,
        t: spec.t,
        lambda: f.format_scalar(spec.lambda),
        mu: f.format_scalar(spec.mu),
        dim: None,
    };
    let h = match Algebra::build(spec) {
        Ok(h) => h,
        Err(Error::RelationCheckFailed(name)) => {
            return Ok(Output { instance, sections: vec![("algebra", suites::relation_failure_report(&name))] });
        }
        Err(e) => return Err(e),
    };
    instance.dim = Some(h.dim());
    let mut runner = Runner { cli, h: &h, sections: Vec::new(), analysis: None, covers: None };
    if let Some(cmd) = &cli.command {
        match runner.suite(cmd) {
            Ok(_) => {}
            Err(e) if is_config_error(&e) => return Err(e),
            Err(e) => {
                let mut r = Report::new();
                r.push("error", Status::Fail, json!(e.to_string()), Value::Null, "suite completed without error");
                runner.sections.push(("error", r));
            }
        }
    }
    let sections = runner.sections;
    Ok(Output { instance, sections })
}
