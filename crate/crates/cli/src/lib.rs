//! `cirsa`: keys, encryption, number-theoretic queries and lab runs.
//!
//! Exit status: 0 on success, 1 when a verification finds violations,
//! 2 on usage or data errors. [`run`] executes one command line in-process
//! and returns the status with everything it printed.

use std::ffi::OsString;
use std::fmt::{self, Write as _};
use std::fs;
use std::path::{Path, PathBuf};

use cirsa_core::factor::factor_element_with;
use cirsa_core::intmath::FactorBudget;
use cirsa_core::numtheory::{crt_solve, phi_brute, phi_from_factorization, CongruenceSystem};
use cirsa_core::quotient::{reduce, PrincipalIdeal};
use cirsa_core::rsa::keyfile::{
    parse_ciphertext, parse_private, parse_public, write_ciphertext, write_private, write_public,
    Ciphertext, PRIVATE_HEADER,
};
use cirsa_core::rsa::{self, block_capacity, PublicKey};
use cirsa_core::{Element, RingId};
use cirsa_lab::{
    all_ideals, ci_witness, crt_cor1_verify, theorem5_verify, FiniteRing, LabError, RingKind,
};
use clap::{Args, Parser, Subcommand};
use num_bigint::BigUint;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const MIN_KEY_BITS: u32 = 16;

#[derive(Parser)]
#[command(name = "cirsa", version, about = "RSA over ideals of Euclidean rings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a key pair, writing <prefix>.pub and <prefix>.key
    Keygen {
        #[arg(long)]
        ring: String,
        #[arg(long)]
        bits: u32,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = rsa::DEFAULT_E)]
        e: u64,
        #[arg(long, default_value = "key")]
        out_prefix: PathBuf,
    },
    /// Encrypt a file with a public (or private) key
    Encrypt(Io),
    /// Decrypt a ciphertext file with a private key
    Decrypt(Io),
    /// Euler's function of the ideal (m)
    Phi {
        #[arg(long)]
        ring: String,
        #[arg(allow_hyphen_values = true)]
        element: String,
        /// Largest norm checked by enumeration
        #[arg(long, default_value_t = 100_000)]
        cap: u64,
        #[command(flatten)]
        budget: Budget,
    },
    /// Factor an element into primes
    Factor {
        #[arg(long)]
        ring: String,
        #[arg(allow_hyphen_values = true)]
        element: String,
        #[command(flatten)]
        budget: Budget,
    },
    /// Solve x = r_i (mod m_i), each congruence given as r@m
    Crt {
        #[arg(long)]
        ring: String,
        #[arg(required = true, allow_hyphen_values = true)]
        congruences: Vec<String>,
    },
    /// Finite-ring lab
    #[command(subcommand)]
    Lab(LabCommand),
}

#[derive(Args)]
struct Io {
    #[arg(long)]
    key: PathBuf,
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct Budget {
    /// Trial division bound for integer factoring
    #[arg(long, default_value_t = FactorBudget::default().trial_limit)]
    trial_limit: u64,
    /// Pollard rho iteration budget
    #[arg(long, default_value_t = FactorBudget::default().rho_iterations)]
    rho_iterations: u64,
}

impl Budget {
    fn get(&self) -> FactorBudget {
        FactorBudget {
            trial_limit: self.trial_limit,
            rho_iterations: self.rho_iterations,
        }
    }
}

#[derive(Subcommand)]
enum LabCommand {
    /// Decide whether all ideals commute
    CheckCi(LabRing),
    /// List the two-sided ideals
    Ideals(LabRing),
    /// RSA-ideals vs products of distinct maximal ideals
    VerifyTheorem5(LabRing),
    /// Chinese remaindering over comaximal families
    VerifyCrt(LabRing),
}

#[derive(Args)]
struct LabRing {
    /// e.g. zmod:12, gf4, matrix2:gf2, triangular2:gf3, product(zmod:2,zmod:4)
    #[arg(
        long,
        conflicts_with = "table_file",
        required_unless_present = "table_file"
    )]
    ring_spec: Option<String>,
    #[arg(long)]
    table_file: Option<PathBuf>,
    /// Largest ring order accepted
    #[arg(long, default_value_t = cirsa_lab::DEFAULT_ORDER_CAP)]
    cap: usize,
}

enum CliError {
    Core(cirsa_core::Error),
    Lab(LabError),
    Io(PathBuf, std::io::Error),
    Invalid(&'static str, String),
}

impl CliError {
    fn name(&self) -> &'static str {
        match self {
            CliError::Core(e) => e.name(),
            CliError::Lab(e) => e.name(),
            CliError::Io(..) => "IoError",
            CliError::Invalid(name, _) => name,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Lab(e) => write!(f, "{e}"),
            CliError::Io(p, e) => write!(f, "{}: {e}", p.display()),
            CliError::Invalid(_, msg) => write!(f, "{msg}"),
        }
    }
}

impl From<cirsa_core::Error> for CliError {
    fn from(e: cirsa_core::Error) -> Self {
        CliError::Core(e)
    }
}

impl From<LabError> for CliError {
    fn from(e: LabError) -> Self {
        CliError::Lab(e)
    }
}

type Result<T> = std::result::Result<T, CliError>;

/// Exit status and captured output of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: u8,
    pub stdout: String,
    pub stderr: String,
}

/// Runs `args` (program name first) as a `cirsa` command line.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let mut stdout = String::new();
    let mut stderr = String::new();
    let code = match Cli::try_parse_from(args) {
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                stderr = text;
            } else {
                stdout = text;
            }
            e.exit_code() as u8
        }
        Ok(cli) => match dispatch(cli.command, &mut stdout) {
            Ok(code) => code,
            Err(e) => {
                writeln!(stderr, "error: {}: {e}", e.name()).unwrap();
                2
            }
        },
    };
    Outcome {
        code,
        stdout,
        stderr,
    }
}

fn dispatch(cmd: Command, out: &mut String) -> Result<u8> {
    match cmd {
        Command::Keygen {
            ring,
            bits,
            seed,
            e,
            out_prefix,
        } => keygen(&ring, bits, seed, e, &out_prefix, out),
        Command::Encrypt(io) => encrypt(&io, out),
        Command::Decrypt(io) => decrypt(&io, out),
        Command::Phi {
            ring,
            element,
            cap,
            budget,
        } => phi(&ring, &element, cap, budget.get(), out),
        Command::Factor {
            ring,
            element,
            budget,
        } => factor(&ring, &element, budget.get(), out),
        Command::Crt { ring, congruences } => crt(&ring, &congruences, out),
        Command::Lab(cmd) => lab(cmd, out),
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| CliError::Io(path.to_owned(), e))
}

fn write(path: &Path, data: impl AsRef<[u8]>) -> Result<()> {
    fs::write(path, data).map_err(|e| CliError::Io(path.to_owned(), e))
}

fn ring(tag: &str) -> Result<RingId> {
    Ok(tag.parse()?)
}

fn with_suffix(prefix: &Path, suffix: &str) -> PathBuf {
    let mut s = prefix.as_os_str().to_owned();
    s.push(suffix);
    PathBuf::from(s)
}

fn keygen(tag: &str, bits: u32, seed: u64, e: u64, prefix: &Path, out: &mut String) -> Result<u8> {
    let ring = ring(tag)?;
    if bits < MIN_KEY_BITS {
        return Err(CliError::Invalid(
            "ModulusTooSmall",
            format!("{bits} bits cannot hold a length byte and a payload byte (need at least {MIN_KEY_BITS})"),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (pk, sk) = rsa::keygen(&ring, bits, &BigUint::from(e), &mut rng)?;
    write(&with_suffix(prefix, ".pub"), write_public(&pk))?;
    write(&with_suffix(prefix, ".key"), write_private(&pk, &sk))?;
    writeln!(out, "ring: {ring}").unwrap();
    writeln!(out, "modulus: {}", pk.modulus().generator()).unwrap();
    writeln!(out, "modulus norm: {}", pk.modulus().norm()).unwrap();
    writeln!(out, "phi bits: {}", sk.phi().bits()).unwrap();
    writeln!(out, "e: {}", pk.e()).unwrap();
    Ok(0)
}

fn load_public(path: &Path) -> Result<PublicKey> {
    let text = read(path)?;
    if text.starts_with(PRIVATE_HEADER) {
        Ok(parse_private(&text)?.0)
    } else {
        Ok(parse_public(&text)?)
    }
}

fn encrypt(io: &Io, out: &mut String) -> Result<u8> {
    let pk = load_public(&io.key)?;
    let payload = fs::read(&io.input).map_err(|e| CliError::Io(io.input.clone(), e))?;
    let blocks = rsa::encrypt_message(&payload, &pk)?;
    let ct = Ciphertext {
        modulus: pk.modulus().clone(),
        blocks,
    };
    write(&io.out, write_ciphertext(&ct))?;
    writeln!(
        out,
        "encrypted {} bytes into {} blocks of capacity {}",
        payload.len(),
        ct.blocks.len(),
        block_capacity(pk.residue_box().size())?
    )
    .unwrap();
    Ok(0)
}

fn decrypt(io: &Io, out: &mut String) -> Result<u8> {
    let (pk, sk) = parse_private(&read(&io.key)?)?;
    let ct = parse_ciphertext(&read(&io.input)?)?;
    if &ct.modulus != pk.modulus() {
        return Err(CliError::Invalid(
            "KeyMismatch",
            "ciphertext modulus differs from the key's".into(),
        ));
    }
    let plain = rsa::decrypt_message(&ct.blocks, &sk, &pk)?;
    write(&io.out, &plain)?;
    writeln!(
        out,
        "decrypted {} blocks into {} bytes",
        ct.blocks.len(),
        plain.len()
    )
    .unwrap();
    Ok(0)
}

fn phi(tag: &str, element: &str, cap: u64, budget: FactorBudget, out: &mut String) -> Result<u8> {
    let ring = ring(tag)?;
    let ideal = PrincipalIdeal::new(Element::parse(&ring, element)?)?;
    let f = factor_element_with(ideal.generator(), budget).map_err(|e| match e {
        cirsa_core::Error::BudgetExceeded(m) => cirsa_core::Error::FactoringFailed(format!(
            "{m} (trial limit {}, rho iterations {})",
            budget.trial_limit, budget.rho_iterations
        )),
        other => other,
    })?;
    let closed = phi_from_factorization(&f);
    writeln!(out, "ideal: {ideal}").unwrap();
    writeln!(out, "norm: {}", ideal.norm()).unwrap();
    writeln!(out, "phi: {closed}").unwrap();
    if ideal.norm() <= BigUint::from(cap) {
        let brute = phi_brute(&ideal, cap)?;
        let mark = if brute == closed { "AGREE" } else { "DISAGREE" };
        writeln!(out, "brute: {brute} {mark}").unwrap();
        if brute != closed {
            return Ok(1);
        }
    } else {
        writeln!(out, "brute: skipped (norm exceeds cap {cap})").unwrap();
    }
    Ok(0)
}

fn factor(tag: &str, element: &str, budget: FactorBudget, out: &mut String) -> Result<u8> {
    let ring = ring(tag)?;
    let m = Element::parse(&ring, element)?;
    let f = factor_element_with(&m, budget)?;
    writeln!(out, "element: {m}").unwrap();
    writeln!(out, "unit: {}", f.unit).unwrap();
    for (p, e) in &f.factors {
        writeln!(out, "prime: ({p})^{e} norm {}", p.norm()?).unwrap();
    }
    let ok = f.recompose() == m;
    writeln!(out, "recomposition: {}", if ok { "OK" } else { "MISMATCH" }).unwrap();
    Ok(if ok { 0 } else { 1 })
}

fn crt(tag: &str, congruences: &[String], out: &mut String) -> Result<u8> {
    let ring = ring(tag)?;
    let mut pairs = Vec::new();
    for c in congruences {
        let (r, m) = c.split_once('@').ok_or_else(|| {
            CliError::Core(cirsa_core::Error::Parse(format!(
                "{c:?} is not of the form residue@modulus"
            )))
        })?;
        pairs.push((
            Element::parse(&ring, r)?,
            PrincipalIdeal::new(Element::parse(&ring, m)?)?,
        ));
    }
    let sys = CongruenceSystem::new(pairs)?;
    let x = crt_solve(&sys).map_err(|e| match e {
        cirsa_core::Error::NotComaximal { first, second } => CliError::Invalid(
            "NotComaximal",
            format!(
                "congruences #{first} and #{second} have non-comaximal moduli {} and {}",
                sys.pairs()[first].1,
                sys.pairs()[second].1
            ),
        ),
        other => other.into(),
    })?;
    let product = sys
        .pairs()
        .iter()
        .skip(1)
        .try_fold(sys.pairs()[0].1.clone(), |acc, (_, a)| {
            cirsa_core::ideal_product(&acc, a)
        })?;
    writeln!(out, "solution: {x} mod {product}").unwrap();
    let mut all = true;
    for (r, a) in sys.pairs() {
        let ok = reduce(&x, a)? == reduce(r, a)?;
        all &= ok;
        writeln!(
            out,
            "check: {x} = {r} mod {a} {}",
            if ok { "OK" } else { "FAIL" }
        )
        .unwrap();
    }
    Ok(if all { 0 } else { 1 })
}

fn lab_ring(spec: &LabRing) -> Result<FiniteRing> {
    match (&spec.ring_spec, &spec.table_file) {
        (Some(s), _) => Ok(FiniteRing::build(&s.parse::<RingKind>()?, spec.cap)?),
        (None, Some(path)) => {
            let label = path
                .file_name()
                .map_or("table".into(), |n| n.to_string_lossy().into_owned());
            Ok(cirsa_lab::tables::parse_tables(
                &read(path)?,
                &label,
                spec.cap,
            )?)
        }
        (None, None) => unreachable!("clap requires one of the two"),
    }
}

fn lab(cmd: LabCommand, out: &mut String) -> Result<u8> {
    let (LabCommand::CheckCi(spec)
    | LabCommand::Ideals(spec)
    | LabCommand::VerifyTheorem5(spec)
    | LabCommand::VerifyCrt(spec)) = &cmd;
    let ring = lab_ring(spec)?;
    let lattice = all_ideals(&ring, spec.cap)?;
    let describe = |i: usize| format!("#{i} ({})", lattice.get(i).display(&ring));
    match cmd {
        LabCommand::Ideals(_) => {
            writeln!(
                out,
                "{}: order {}, {} ideals",
                ring.label(),
                ring.order(),
                lattice.len()
            )
            .unwrap();
            for i in 0..lattice.len() {
                let mark = if cirsa_lab::is_maximal(&ring, &lattice, lattice.get(i)) {
                    " maximal"
                } else {
                    ""
                };
                writeln!(out, "{}{mark}", describe(i)).unwrap();
            }
            Ok(0)
        }
        LabCommand::CheckCi(_) => match ci_witness(&ring, &lattice)? {
            None => {
                writeln!(
                    out,
                    "{}: CI ({} ideals, all products commute)",
                    ring.label(),
                    lattice.len()
                )
                .unwrap();
                Ok(0)
            }
            Some((i, j)) => {
                writeln!(out, "{}: NOT CI", ring.label()).unwrap();
                writeln!(out, "witness A = {}", describe(i)).unwrap();
                writeln!(out, "witness B = {}", describe(j)).unwrap();
                let ab = cirsa_lab::fideal_product(&ring, lattice.get(i), lattice.get(j))?;
                let ba = cirsa_lab::fideal_product(&ring, lattice.get(j), lattice.get(i))?;
                writeln!(out, "AB: {}", ab.display(&ring)).unwrap();
                writeln!(out, "BA: {}", ba.display(&ring)).unwrap();
                writeln!(out, "VIOLATION ci {i} {j}").unwrap();
                Ok(1)
            }
        },
        LabCommand::VerifyTheorem5(_) => {
            let r = theorem5_verify(&ring, &lattice).map_err(|e| match e {
                LabError::NotCIRing { first, second } => CliError::Invalid(
                    "NotCIRing",
                    format!(
                        "{} is not a CI-ring: witness {} and {}",
                        ring.label(),
                        describe(first),
                        describe(second)
                    ),
                ),
                other => other.into(),
            })?;
            report(r, out)
        }
        LabCommand::VerifyCrt(_) => report(crt_cor1_verify(&ring, &lattice)?, out),
    }
}

fn report(r: cirsa_lab::Report, out: &mut String) -> Result<u8> {
    write!(out, "{r}").unwrap();
    Ok(if r.is_clean() { 0 } else { 1 })
}
