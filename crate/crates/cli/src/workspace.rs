//! Loads the objects a command works on, from files or from a gallery
//! fixture, and records where each came from.

use std::fs;
use std::path::{Path, PathBuf};

use sha2::{Digest, Sha256};
use tphopf::gallery::{self, Fixture};
use tphopf::hopfcore::HopfAlgebra;
use tphopf::invariants::ColinearAlgebraMap;
use tphopf::repcat::{verify_comodule_tp_algebra, verify_tp_hopf_module, ComoduleTPAlgebra, TPHopfModule};
use tphopf::tpalg::Subalgebra;
use tphopf::Subspace;

use crate::error::CliError;
use crate::format::{AlgebraFile, Document, HopfFile, ModuleFile, PhiFile};

/// Where a loaded object came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Source {
    pub kind: String,
    pub name: String,
    /// A file path, or `gallery:NAME`.
    pub origin: String,
    /// SHA-256 of the file bytes, or of the canonical text for gallery objects.
    pub sha256: String,
}

fn digest(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

/// Reads and parses one document.
pub fn read_document(path: &Path) -> Result<(Document, Source), CliError> {
    let bytes = fs::read(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })?;
    let text = String::from_utf8(bytes.clone())
        .map_err(|_| CliError::Input(format!("{}: not UTF-8", path.display())))?;
    let doc = Document::parse(&text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    let source = Source {
        kind: doc.kind().to_string(),
        name: doc.name().to_string(),
        origin: path.display().to_string(),
        sha256: digest(&bytes),
    };
    Ok((doc, source))
}

pub fn gallery_source(fixture: &str, doc: &Document) -> Source {
    Source {
        kind: doc.kind().to_string(),
        name: doc.name().to_string(),
        origin: format!("gallery:{fixture}"),
        sha256: digest(doc.to_canonical().as_bytes()),
    }
}

pub fn fixture(name: &str) -> Result<Fixture, CliError> {
    gallery::fixture(name).ok_or_else(|| {
        CliError::Input(format!("unknown example `{name}`; known: {}", gallery::names().join(", ")))
    })
}

/// The documents of a fixture, in load order.
pub fn fixture_documents(f: &Fixture) -> Vec<(String, Document)> {
    let mut out = vec![
        ("hopf".to_string(), Document::Hopf(HopfFile::from_hopf(&f.hopf))),
        ("algebra".to_string(), Document::Algebra(AlgebraFile::from_algebra(&f.algebra, &f.hopf.name))),
        (
            "module".to_string(),
            Document::Module(ModuleFile::from_module(&f.module, &f.algebra.name, &f.hopf.name)),
        ),
    ];
    if let Some(phi) = &f.phi {
        out.push((
            "phi".to_string(),
            Document::Phi(PhiFile::from_phi(&format!("{} phi", f.name), phi, &f.hopf.name, &f.algebra.name)),
        ));
    }
    out
}

fn expect_kind<T>(doc: Document, path: &Path, want: &str, pick: impl FnOnce(Document) -> Option<T>) -> Result<T, CliError> {
    let kind = doc.kind();
    pick(doc).ok_or_else(|| CliError::Input(format!("{}: expected a `{want}` document, found `{kind}`", path.display())))
}

fn check_ref(what: &str, owner: &str, declared: &Option<String>, loaded: &str) -> Result<(), CliError> {
    match declared {
        Some(d) if d != loaded => Err(CliError::Input(format!(
            "{owner} is declared over {what} `{d}`, but `{loaded}` is loaded"
        ))),
        _ => Ok(()),
    }
}

/// Files and fixture a command was pointed at. Files override the fixture.
#[derive(Debug, Clone, Default)]
pub struct Inputs {
    pub fixture: Option<String>,
    pub hopf: Option<PathBuf>,
    pub algebra: Option<PathBuf>,
    pub module: Option<PathBuf>,
    pub phi: Option<PathBuf>,
    pub subalgebra: Option<PathBuf>,
}

/// Loaded objects. `H` defaults to the trivial Hopf algebra and `M` to the
/// regular module of `A`.
#[derive(Debug, Clone)]
pub struct Workspace {
    pub hopf: HopfAlgebra,
    pub algebra: Option<ComoduleTPAlgebra>,
    pub module: Option<TPHopfModule>,
    pub phi: Option<ColinearAlgebraMap>,
    pub subalgebra: Option<Subalgebra>,
    pub sources: Vec<Source>,
}

impl Workspace {
    pub fn load(inputs: &Inputs) -> Result<Self, CliError> {
        let fix = inputs.fixture.as_deref().map(fixture).transpose()?;
        let mut sources = Vec::new();
        if let (Some(f), Some(name)) = (&fix, &inputs.fixture) {
            for (role, doc) in fixture_documents(f) {
                let overridden = match role.as_str() {
                    "hopf" => inputs.hopf.is_some(),
                    "algebra" => inputs.algebra.is_some(),
                    "module" => inputs.module.is_some() || inputs.algebra.is_some(),
                    _ => inputs.phi.is_some() || inputs.algebra.is_some() || inputs.hopf.is_some(),
                };
                if !overridden {
                    sources.push(gallery_source(name, &doc));
                }
            }
        }

        let hopf = match (&inputs.hopf, &fix) {
            (Some(p), _) => {
                let (doc, src) = read_document(p)?;
                sources.push(src);
                expect_kind(doc, p, "hopf", |d| match d {
                    Document::Hopf(h) => Some(h),
                    _ => None,
                })?
                .build()?
            }
            (None, Some(f)) => f.hopf.clone(),
            (None, None) => HopfAlgebra::trivial(),
        };

        let algebra = match (&inputs.algebra, &fix) {
            (Some(p), _) => {
                let (doc, src) = read_document(p)?;
                sources.push(src);
                let file = expect_kind(doc, p, "algebra", |d| match d {
                    Document::Algebra(a) => Some(a),
                    _ => None,
                })?;
                check_ref("Hopf algebra", &format!("algebra `{}`", file.name), &file.over_hopf, &hopf.name)?;
                Some(file.build(&hopf).map_err(|e| in_file(p, e))?)
            }
            (None, Some(f)) => Some(f.algebra.clone()),
            (None, None) => None,
        };

        let module = match (&inputs.module, &fix) {
            (Some(p), _) => {
                let a = algebra
                    .as_ref()
                    .ok_or_else(|| CliError::Input("a module needs an algebra (--algebra)".into()))?;
                let (doc, src) = read_document(p)?;
                sources.push(src);
                let file = expect_kind(doc, p, "module", |d| match d {
                    Document::Module(m) => Some(m),
                    _ => None,
                })?;
                let owner = format!("module `{}`", file.name);
                check_ref("algebra", &owner, &file.over_algebra, &a.name)?;
                check_ref("Hopf algebra", &owner, &file.over_hopf, &hopf.name)?;
                Some(file.build(a.dim(), &hopf).map_err(|e| in_file(p, e))?)
            }
            (None, Some(f)) if inputs.algebra.is_none() => Some(f.module.clone()),
            _ => algebra.as_ref().map(TPHopfModule::regular),
        };

        let phi = match (&inputs.phi, &fix) {
            (Some(p), _) => {
                let a = algebra
                    .as_ref()
                    .ok_or_else(|| CliError::Input("φ needs an algebra (--algebra)".into()))?;
                let (doc, src) = read_document(p)?;
                sources.push(src);
                let file = expect_kind(doc, p, "phi", |d| match d {
                    Document::Phi(m) => Some(m),
                    _ => None,
                })?;
                let owner = format!("φ `{}`", file.name);
                check_ref("Hopf algebra", &owner, &file.from_hopf, &hopf.name)?;
                check_ref("algebra", &owner, &file.to_algebra, &a.name)?;
                Some(file.build(a, &hopf).map_err(|e| in_file(p, e))?)
            }
            (None, Some(f)) if inputs.algebra.is_none() && inputs.hopf.is_none() => f.phi.clone(),
            _ => None,
        };

        let subalgebra = match &inputs.subalgebra {
            Some(p) => {
                let a = algebra
                    .as_ref()
                    .ok_or_else(|| CliError::Input("a subalgebra needs an algebra (--algebra)".into()))?;
                let (doc, src) = read_document(p)?;
                sources.push(src);
                let file = expect_kind(doc, p, "subalgebra", |d| match d {
                    Document::Subalgebra(s) => Some(s),
                    _ => None,
                })?;
                check_ref("algebra", &format!("subalgebra `{}`", file.name), &file.inside, &a.name)?;
                let gens = file.generators(a.dim()).map_err(|e| in_file(p, e))?;
                Some(Subalgebra::induced(&a.tp, Subspace::span(a.dim(), &gens))?)
            }
            None => None,
        };

        Ok(Self {
            hopf,
            algebra,
            module,
            phi,
            subalgebra,
            sources,
        })
    }

    pub fn algebra(&self) -> Result<&ComoduleTPAlgebra, CliError> {
        self.algebra
            .as_ref()
            .ok_or_else(|| CliError::Input("no algebra given (pass an example name or --algebra)".into()))
    }

    pub fn module(&self) -> Result<&TPHopfModule, CliError> {
        self.module
            .as_ref()
            .ok_or_else(|| CliError::Input("no module given (pass an example name or --module)".into()))
    }

    pub fn phi(&self) -> Result<&ColinearAlgebraMap, CliError> {
        self.phi
            .as_ref()
            .ok_or_else(|| CliError::Input("no φ given (pass --phi)".into()))
    }

    /// Re-verifies `A` as an `H`-comodule transposed Poisson algebra and `M`
    /// as a transposed Poisson `(A,H)`-Hopf module.
    pub fn verify(&self) -> Result<(), CliError> {
        let a = self.algebra()?;
        let r = verify_comodule_tp_algebra(a, &self.hopf)?;
        if !r.pass() {
            return Err(CliError::Verification(format!("algebra `{}`:\n{r}", a.name)));
        }
        if let Some(m) = &self.module {
            let r = verify_tp_hopf_module(m, a, &self.hopf)?;
            if !r.pass() {
                return Err(CliError::Verification(format!("module `{}`:\n{r}", m.name)));
            }
        }
        Ok(())
    }
}

fn in_file(path: &Path, e: CliError) -> CliError {
    match e {
        CliError::Input(msg) => CliError::Input(format!("{}: {msg}", path.display())),
        other => other,
    }
}
