use super::{CatalogEntry, Provenance, Recipe, Status, Value};
use crate::algebra::IntPolynomial;

const SQRT3: f64 = 1.732_050_807_568_877_2;

/// First 17 significant digits of a printed decimal.
fn truncate17(src: &str) -> f64 {
    let mut out = String::new();
    let mut sig = 0;
    for ch in src.chars() {
        if ch.is_ascii_digit() {
            if sig > 0 || ch != '0' {
                sig += 1;
            }
            if sig > 17 {
                continue;
            }
        }
        out.push(ch);
    }
    out.parse().expect("catalog decimals parse")
}

fn dec(name: &str, src: &str) -> Value {
    Value { name: name.into(), source: src.into(), value: truncate17(src), polynomial: None }
}

fn root(name: &str, src: &str, poly: &str) -> Value {
    Value { polynomial: Some(poly.parse::<IntPolynomial>().expect("catalog polynomials parse")), ..dec(name, src) }
}

fn exact(name: &str, src: &str, value: f64) -> Value {
    Value { name: name.into(), source: src.into(), value, polynomial: None }
}

struct Row {
    n: usize,
    status: Status,
    provenance: Provenance,
    parameters: Vec<Value>,
    scheme_id: &'static str,
    height: Option<Value>,
    radius: Option<Value>,
    digits: usize,
    recorded: f64,
    reference: Option<f64>,
    notes: &'static [&'static str],
    recipe: Recipe,
}

impl Row {
    fn new(n: usize, provenance: Provenance, recorded: f64, reference: Option<f64>) -> Self {
        Self {
            n,
            status: Status::PutativeGlobal,
            provenance,
            parameters: Vec::new(),
            scheme_id: "generic",
            height: None,
            radius: None,
            digits: 17,
            recorded,
            reference,
            notes: &[],
            recipe: Recipe::Scheme,
        }
    }

    fn build(self) -> CatalogEntry {
        CatalogEntry {
            n: self.n,
            status: self.status,
            provenance: self.provenance,
            parameters: self.parameters,
            scheme_id: self.scheme_id.into(),
            stated_height: self.height,
            stated_radius: self.radius,
            source_digits: self.digits,
            recorded_degrees: self.recorded,
            reference_degrees: self.reference,
            notes: self.notes.iter().map(|s| s.to_string()).collect(),
            recipe: self.recipe,
        }
    }
}

fn sq(x: f64) -> f64 {
    x.sqrt()
}

fn coords_2(_: &[f64]) -> Vec<[f64; 3]> {
    vec![[1.0, 0.0, 0.0], [-1.0, 0.0, 0.0]]
}

fn coords_3(_: &[f64]) -> Vec<[f64; 3]> {
    vec![[1.0, 0.0, 0.0], [-0.5, SQRT3 / 2.0, 0.0], [-0.5, -SQRT3 / 2.0, 0.0]]
}

fn coords_4(_: &[f64]) -> Vec<[f64; 3]> {
    let s2 = sq(2.0);
    vec![
        [0.0, 0.0, 1.0],
        [2.0 * s2 / 3.0, 0.0, -1.0 / 3.0],
        [-s2 / 3.0, 2.0 / sq(6.0), -1.0 / 3.0],
        [-s2 / 3.0, -2.0 / sq(6.0), -1.0 / 3.0],
    ]
}

fn coords_5(_: &[f64]) -> Vec<[f64; 3]> {
    vec![[0.0, 0.0, 1.0], [1.0, 0.0, 0.0], [-0.5, SQRT3 / 2.0, 0.0], [-0.5, -SQRT3 / 2.0, 0.0], [0.0, 0.0, -1.0]]
}

/// Poles, then a regular pentagon on the equator starting at +y.
fn coords_7(_: &[f64]) -> Vec<[f64; 3]> {
    let mut v = vec![[0.0, 0.0, 1.0], [0.0, 0.0, -1.0], [0.0, 1.0, 0.0]];
    for deg in [162.0f64, 234.0, 306.0, 18.0] {
        let (s, c) = deg.to_radians().sin_cos();
        v.push([c, s, 0.0]);
    }
    v
}

fn coords_8(p: &[f64]) -> Vec<[f64; 3]> {
    let (a, b, c, d) = (p[0], p[1], p[2], p[3]);
    vec![
        [-a, b, 0.0],
        [-a, -b, 0.0],
        [c, d, 0.0],
        [a, 0.0, -b],
        [-c, 0.0, d],
        [a, 0.0, b],
        [-c, 0.0, -d],
        [c, -d, 0.0],
    ]
}

const TABLE_19: [[&str; 3]; 19] = [
    ["0", "0", "1"],
    ["0", "0.6349761541800811871", "0.7725317363206988435"],
    ["0.5054445214482143497", "-0.5118504076083359682", "0.6946473896655524819"],
    ["-0.7581515192682984255", "0.1596157978684256165", "0.6322413074942168137"],
    ["-0.4234878603963508922", "-0.6656837752201766543", "0.6144291200012692593"],
    ["0.8047489411172299238", "0.2607800469930158432", "0.5332662645067824403"],
    ["0.4723506300405221527", "0.8667489431614193441", "0.1600973198678991952"],
    ["-0.4912697990033500679", "0.8582706651730744570", "0.1484097365086817373"],
    ["0.2729225847858185526", "-0.9535579251124018077", "0.1274384014697249313"],
    ["-0.8942840794753883523", "-0.4466984223769217937", "-0.02676760435351778201"],
    ["0.8984314716567872042", "-0.4346451142101566152", "-0.06248612189806215329"],
    ["-0.9586695281987397591", "0.2018315013174024181", "-0.2005412196511457839"],
    ["-0.2926045265007563933", "-0.9045898152807171949", "-0.3099997696155048657"],
    ["0.8863416803125210279", "0.2644358420743626163", "-0.3800948712718964430"],
    ["0.1494400093439340701", "0.8646336895501477554", "-0.4796626590659143753"],
    ["0.4329709803299691077", "-0.5421967394763222409", "-0.7201102873125412109"],
    ["-0.4664477027156708823", "0.5036405554329888274", "-0.7271676089832547174"],
    ["-0.4539608950401538617", "-0.3346307578099949915", "-0.8257976517899835280"],
    ["0.2994951172520864587", "0.1824399201425274308", "-0.9364925788710486081"],
];

fn coords_19(_: &[f64]) -> Vec<[f64; 3]> {
    TABLE_19.iter().map(|r| r.map(truncate17)).collect()
}

fn coords_32(_: &[f64]) -> Vec<[f64; 3]> {
    let s5 = sq(5.0);
    let g = sq((3.0 - s5) / 6.0);
    let gg = sq((3.0 + s5) / 6.0);
    let k = sq((5.0 - s5) / 10.0);
    let kk = sq((5.0 + s5) / 10.0);
    let t = sq(1.0 / 3.0);
    vec![
        [g, 0.0, gg],
        [-g, 0.0, gg],
        [0.0, k, kk],
        [0.0, -k, kk],
        [t, t, t],
        [-t, t, t],
        [t, -t, t],
        [-t, -t, t],
        [kk, 0.0, k],
        [-kk, 0.0, k],
        [0.0, gg, g],
        [0.0, -gg, g],
        [-gg, g, 0.0],
        [-gg, -g, 0.0],
        [-k, kk, 0.0],
        [-k, -kk, 0.0],
        [k, kk, 0.0],
        [k, -kk, 0.0],
        [gg, g, 0.0],
        [gg, -g, 0.0],
        [0.0, gg, -g],
        [0.0, -gg, -g],
        [kk, 0.0, -k],
        [-kk, 0.0, -k],
        [t, t, -t],
        [-t, t, -t],
        [t, -t, -t],
        [-t, -t, -t],
        [0.0, k, -kk],
        [0.0, -k, -kk],
        [g, 0.0, -gg],
        [-g, 0.0, -gg],
    ]
}

/// Heights, then x-coordinates of the triangle representatives (upper 2..7,
/// lower 1..7), from a multi-start search under the fourteen-triangle scheme.
const PARAMS_42: [&str; 20] = [
    "0.93940521236177854",
    "0.76416312936923603",
    "0.62321238362611397",
    "0.54405265299874939",
    "0.27460900071627142",
    "0.27813835095195055",
    "-0.076385424878246608",
    "0.24250722296563718",
    "0.7100790821295353",
    "-0.2548093650615208",
    "-0.93616208794164946",
    "0.20504035269413887",
    "-0.24904010221160294",
    "-0.14976804701234048",
    "0.43169344971860069",
    "-0.015441923226287358",
    "-0.51917638875077432",
    "0.34298728891967184",
    "0.75452937952399712",
    "0.97726447041605946",
];

pub(super) fn entry(n: usize) -> Option<CatalogEntry> {
    use Provenance::*;
    let s5 = sq(5.0);
    let zero = || exact("height", "0", 0.0);
    let one = || exact("radius", "1", 1.0);
    let row = match n {
        2 => Row { height: Some(zero()), radius: Some(one()), recipe: Recipe::Coordinates(coords_2), ..Row::new(2, ClosedForm, 90.0, None) },
        3 => Row {
            height: Some(zero()),
            radius: Some(one()),
            recipe: Recipe::Coordinates(coords_3),
            ..Row::new(3, ClosedForm, 90.0, Some(90.0))
        },
        4 => Row {
            height: Some(exact("height", "1/3", 1.0 / 3.0)),
            radius: Some(exact("radius", "2*sqrt(2)/3", 2.0 * sq(2.0) / 3.0)),
            recipe: Recipe::Coordinates(coords_4),
            ..Row::new(4, ClosedForm, 70.5287793655, Some(70.528779))
        },
        5 => Row {
            height: Some(exact("height", "1/sqrt(5)", 1.0 / s5)),
            radius: Some(exact("radius", "2/sqrt(5)", 2.0 / s5)),
            recipe: Recipe::Coordinates(coords_5),
            ..Row::new(5, ClosedForm, 63.4349488229, Some(63.434949))
        },
        6 => Row {
            parameters: vec![exact("a", "0", 0.0)],
            scheme_id: "square-ring",
            height: Some(exact("height", "1/sqrt(3)", 1.0 / SQRT3)),
            radius: Some(exact("radius", "sqrt(2/3)", sq(2.0 / 3.0))),
            ..Row::new(6, ClosedForm, 54.7356103172, Some(54.735610))
        },
        7 => Row {
            height: Some(exact("height", "sqrt(7+2*sqrt(5))/sqrt(29)", sq(7.0 + 2.0 * s5) / sq(29.0))),
            radius: Some(exact("radius", "sqrt(22-2*sqrt(5))/sqrt(29)", sq(22.0 - 2.0 * s5) / sq(29.0))),
            notes: &["table y-entries of caps 4-7 carry stray parentheses and wrong magnitudes; built as the regular pentagon the text describes"],
            recipe: Recipe::Coordinates(coords_7),
            ..Row::new(7, ClosedForm, 51.0265526631, Some(51.026553))
        },
        8 => Row {
            parameters: vec![
                root("a", "0.1715313637258024789", "11x^10 + 90x^8 + 192x^6 + 98x^4 - 139x^2 + 4"),
                root("b", "0.9851786595630086290", "11x^10 - 145x^8 + 662x^6 - 1324x^4 + 1048x^2 - 256"),
                root("c", "0.7867473620995775835", "704x^10 - 1281x^8 + 814x^6 - 160x^4 - 14x^2 + 1"),
                root("d", "0.6172751317114242484", "704x^10 - 2239x^8 + 2730x^6 - 1636x^4 + 504x^2 - 64"),
            ],
            height: Some(root("height", "0.6673188865845566185", "1331x^10 - 2464x^8 + 1738x^6 - 1016x^4 + 291x^2 - 8")),
            radius: Some(root("radius", "0.7447721152188417296", "1331x^10 - 4191x^8 + 5192x^6 - 2724x^4 + 272x^2 + 128")),
            digits: 19,
            notes: &[
                "reference column prints 48.138529; the computed 48.1395290861 suggests a transposed digit",
                "radius polynomial has a sign change at the printed decimal despite its positive constant term",
            ],
            recipe: Recipe::Coordinates(coords_8),
            ..Row::new(8, Polynomial, 48.1395290861, Some(48.138529))
        },
        9 => Row {
            parameters: vec![root("a", "0.6961773622954127151", "16x^8 - 72x^6 + 129x^4 - 66x^2 + 9")],
            scheme_id: "triangle-stack",
            height: Some(root("height", "0.6961773622954127151", "16x^8 - 72x^6 + 129x^4 - 66x^2 + 9")),
            radius: Some(root("radius", "0.7178698212262454947", "4x^4 - 4x^3 + 3x^2 + 4x - 4")),
            digits: 19,
            ..Row::new(9, Polynomial, 45.8788878287, Some(45.878888))
        },
        10 => Row {
            parameters: vec![exact("a", "sqrt(2)-1", sq(2.0) - 1.0)],
            scheme_id: "square-antiprism",
            height: Some(exact("height", "sqrt((1+2*sqrt(2))/7)", sq((1.0 + 2.0 * sq(2.0)) / 7.0))),
            radius: Some(exact("radius", "sqrt((6-2*sqrt(2))/7)", sq((6.0 - 2.0 * sq(2.0)) / 7.0))),
            ..Row::new(10, ClosedForm, 42.3078266301, Some(42.307827))
        },
        11 => Row {
            status: Status::LocalMinimum,
            parameters: vec![
                dec("a", "0.634095032729788663209640739063305380363112029450554156101"),
                dec("b", "0.770868938310986401236315482888284711235202039842114928182"),
                dec("c", "0.336628849216948193713160388499986412982106827714811564941"),
                dec("d", "0.149012786774920662896038564759947076002530372961658824364"),
                dec("e", "0.121449107941445315463065360524596356873178461076451005551"),
                dec("f", "0.796209636433271902876872055559046705042709312447749074551"),
                dec("g", "0.389150175516029347544342728123496721953373440336695885810"),
                dec("h", "0.768129234171283756456290915191894673622200146573358727739"),
                dec("i", "0.842629988260650599505304915391079979121947505883657184842"),
                dec("j", "0.159651353051667299154028178068364986420274751598506328331"),
            ],
            scheme_id: "dipoles",
            height: Some(dec("height", "0.749797087499002078365989833146495343344798552462775132561")),
            radius: Some(dec("radius", "0.661667837799309859442790840122286302673025957640146070376")),
            digits: 57,
            notes: &["the parameter list labels the eighth value a; it is h"],
            ..Row::new(11, Decimal, 41.4271959586, Some(41.427196))
        },
        12 => Row {
            parameters: vec![exact("a", "sqrt(1/5)", sq(0.2))],
            scheme_id: "pentagon-pair",
            height: Some(exact("height", "sqrt((5+2*sqrt(5))/15)", sq((5.0 + 2.0 * s5) / 15.0))),
            radius: Some(exact("radius", "sqrt((10-2*sqrt(5))/15)", sq((10.0 - 2.0 * s5) / 15.0))),
            notes: &["table y-entries print sqrt(5 -+ sqrt(5))/10; unit norm needs sqrt((5 -+ sqrt(5))/10)"],
            ..Row::new(12, ClosedForm, 37.3773681406, Some(37.377368))
        },
        13 => Row {
            status: Status::LocalMinimum,
            parameters: vec![
                dec("a", "0.866334167832381956179562484815574790082863963895771392911"),
                dec("b", "0.845832418056934349532312578229913953813008606380422944999"),
                dec("c", "0.524669634639377289135940108476275632025973178721753636316"),
                dec("d", "0.0158150817488019292491381501149076972731869544937874573519"),
                dec("e", "0.691828524265173209336956705953315739072959232420174267977"),
                dec("f", "0.852938822579064225540289939438775325874868330870216691948"),
            ],
            scheme_id: "mirror-13",
            height: Some(dec("height", "0.797914989941050360712398793941776483164734262306857249527")),
            radius: Some(dec("radius", "0.602769996621740871534109235592856793505094196214815579232")),
            digits: 57,
            ..Row::new(13, Decimal, 37.0685427025, Some(37.068543))
        },
        14 => Row {
            parameters: vec![exact("a", "2*sqrt(3)-3", 2.0 * SQRT3 - 3.0)],
            scheme_id: "hexagon-pair",
            height: Some(exact("height", "sqrt((6*sqrt(3)-3)/11)", sq((6.0 * SQRT3 - 3.0) / 11.0))),
            radius: Some(exact("radius", "sqrt((14-6*sqrt(3))/11)", sq((14.0 - 6.0 * SQRT3) / 11.0))),
            notes: &["radius printed as sqrt((6*sqrt(3)-14)/11), whose radicand is negative; sqrt((14-6*sqrt(3))/11) matches the height"],
            ..Row::new(14, ClosedForm, 34.9379269231, Some(34.937927))
        },
        15 => Row {
            parameters: vec![
                root(
                    "a",
                    "0.7981658270508071459",
                    "866761x^12 - 2571516x^10 + 3920022x^8 - 3748572x^6 + 2360745x^4 - 956448x^2 + 186624",
                ),
                root("b", "0.4608212551057437875", "931x^6 + 204x^5 - 438x^4 - 36x^3 + 123x^2 - 16"),
                root(
                    "c",
                    "0.4847751269560606253",
                    "14776336x^12 - 27743256x^10 + 23442345x^8 - 13991832x^6 + 6473520x^4 - 1772928x^2 + 186624",
                ),
                root("d", "0.2798850500445166073", "3844x^6 + 2876x^5 - 127x^4 - 712x^3 - 196x^2 + 32x + 16"),
                root("e", "0.9216425102114875750", "931x^6 + 408x^5 - 1752x^4 - 288x^3 + 1968x^2 - 1024"),
                root("f", "0.5597701000890332145", "961x^6 + 1438x^5 - 127x^4 - 1424x^3 - 784x^2 + 256x + 256"),
            ],
            scheme_id: "mirror-15",
            height: Some(root(
                "height",
                "0.8286479560382163503",
                "923521x^12 - 3229188x^10 + 4897830x^8 - 3696996x^6 + 1421793x^4 - 272160x^2 + 20736",
            )),
            radius: Some(root("radius", "0.5597701000890332145", "961x^6 + 1438x^5 - 127x^4 - 1424x^3 - 784x^2 + 256x + 256")),
            digits: 19,
            ..Row::new(15, Polynomial, 34.0399001237, Some(34.039900))
        },
        16 => Row {
            parameters: vec![
                exact("a", "sqrt(3/11)", sq(3.0 / 11.0)),
                exact("b", "-sqrt(1/33)", -sq(1.0 / 33.0)),
                exact("c", "-1/3", -1.0 / 3.0),
                exact("d", "-5*sqrt(1/33)", -5.0 * sq(1.0 / 33.0)),
            ],
            scheme_id: "pole-hexagon-triangles",
            height: Some(exact("height", "sqrt((30+3*sqrt(33))/67)", sq((30.0 + 3.0 * sq(33.0)) / 67.0))),
            radius: Some(exact("radius", "sqrt((37-3*sqrt(33))/67)", sq((37.0 - 3.0 * sq(33.0)) / 67.0))),
            ..Row::new(16, ClosedForm, 32.8988127601, Some(32.898812))
        },
        17 => Row {
            status: Status::LocalMinimum,
            parameters: vec![
                dec("a", "0.866081227467719654277982875756395580349279849736090829845"),
                dec("b", "0.839492695431074414313697308819542902864844202373062181182"),
                dec("c", "0.225436996700011596906179251271103687911086381469057624948"),
                dec("d", "0.499142550440532090247633546193092719124405234631304652453"),
                dec("e", "0.453462840795163529462601806038690222756460800405730272164"),
                dec("f", "0.570638847472921471479793503369072549320101673699972073745"),
                dec("g", "0.716685383316618478607701006566675126792988278713530663102"),
                dec("h", "0.0723921505601956715934853706530802283110722765211476936016"),
            ],
            scheme_id: "mirror-17",
            height: Some(dec("height", "0.847187460907206953664488680584350129072560272215165104235")),
            radius: Some(dec("radius", "0.531294086247531734784821102348202565559218797157927151241")),
            digits: 57,
            ..Row::new(17, Decimal, 32.0929327861, Some(32.092933))
        },
        18 => Row {
            status: Status::NeedsInvestigation,
            parameters: vec![
                dec("a", "0.88869607772838093532058871775630035302"),
                dec("b", "0.40536689571338645897257144124355299485"),
                dec("c", "0.85189876064686144991449865810567729609"),
                dec("d", "0.30143558361484884261468005967181211400"),
                dec("e", "0.77266162426483545157943252333119354124"),
                dec("f", "0.59487942737591607435684968399509107452"),
                dec("g", "0.90957338356990010076719272668770552739"),
                dec("h", "0.23290530593982136675359173767933586193"),
            ],
            scheme_id: "triangle-stack-6",
            height: Some(dec("height", "0.85704785593771583133986734474450690675")),
            radius: Some(dec("radius", "0.51523681218694408270171383057325677313")),
            digits: 38,
            notes: &["the text quotes the reference as 30.013172 while the table gives 31.013172; the table value is used"],
            ..Row::new(18, Decimal, 31.0132851551, Some(31.013172))
        },
        19 => Row {
            status: Status::NewLowerValue,
            height: Some(dec("height", "0.862735188616817442401043418772500763853821481432952011260923")),
            radius: Some(dec("radius", "0.505656003941715727509736496422975179334541566435250287496485")),
            digits: 19,
            notes: &["no cap lies on an embedded polygon, so no scheme and no coplanarity check"],
            recipe: Recipe::Coordinates(coords_19),
            ..Row::new(19, CoordinateTable, 30.3749090533, Some(30.382284))
        },
        20 => Row {
            status: Status::LocalMinimum,
            parameters: vec![
                dec("a", "0.984669201215740467462956375889364996551879460868097951710969"),
                dec("b", "0.713862052440409939517513697308912610262081017787932024697946"),
                dec("c", "0.661241128715695374063059099852736537986896799623001382774189"),
                dec("d", "0.621807744273859137652915226525332113809858413969242767291768"),
                dec("e", "0.427536691316927764829460356835178471781602631049905478364429"),
            ],
            scheme_id: "mirror-20",
            height: Some(dec("height", "0.869295752152719094145304529712992668529115364736219859510985")),
            radius: Some(dec("radius", "0.494292317651446385897084343851272189920942056249566920579577")),
            digits: 60,
            notes: &["caps 12 and 13 are printed with negative y; the recorded radius needs positive y"],
            ..Row::new(20, Decimal, 29.6230957838, Some(29.623096))
        },
        22 => Row {
            parameters: vec![
                root("a", "0.6919090810112949212", "95x^6 + 30x^5 - 55x^4 - 20x^3 + 25x^2 - 10x - 1"),
                root("b", "0.2231055241263849123", "9025x^12 - 19550x^10 + 15325x^8 - 5035x^6 + 615x^4 - 40x^2 + 1"),
                root("c", "0.5840978452407353910", "9025x^12 - 12550x^10 + 8500x^8 - 2885x^6 + 465x^4 - 35x^2 + 1"),
                root("d", "0.1677844402621232172", "25x^6 - 50x^5 + 75x^4 - 20x^3 - 25x^2 + 70x - 11"),
                root("e", "0.3046362789712863538", "625x^12 - 1250x^10 + 1750x^8 - 925x^6 + 225x^4 - 25x^2 + 1"),
                root("f", "0.7975481325531225265", "625x^12 - 2500x^10 + 3625x^8 - 1925x^6 + 375x^4 - 50x^2 + 1"),
            ],
            scheme_id: "pentagon-stack",
            height: Some(root("height", "0.8844990833734237006", "28745x^12 - 35070x^10 + 12895x^8 - 2820x^6 + 375x^4 - 30x^2 + 1")),
            radius: Some(root(
                "radius",
                "0.4665419289962835370",
                "28745x^12 - 137400x^10 + 268720x^8 - 272960x^6 + 149760x^4 - 40960x^2 + 4096",
            )),
            digits: 19,
            ..Row::new(22, Polynomial, 27.8100587699, Some(27.810059))
        },
        32 => Row {
            height: Some(root("height", "0.9226021945439894676", "2245x^8 - 2480x^6 + 530x^4 - 40x^2 + 1")),
            radius: Some(root("radius", "0.3857527584121915401", "2245x^8 - 6500x^6 + 6560x^4 - 2560x^2 + 256")),
            digits: 19,
            recipe: Recipe::Coordinates(coords_32),
            ..Row::new(32, ClosedForm, 22.6904803756, Some(22.690480))
        },
        38 => Row {
            parameters: vec![
                root(
                    "a",
                    "0.7996599850609895832",
                    "107x^10 - 298x^9 + 1187x^8 - 312x^7 + 1110x^6 + 4356x^5 - 5346x^4 - 4536x^3 + 8991x^2 + 4374x - 6561",
                ),
                root(
                    "b",
                    "0.4056080372332561015",
                    "x^10 - 62x^9 + 1453x^8 - 16408x^7 + 100418x^6 - 364132x^5 + 932866x^4 - 1625336x^3 + 1928317x^2 - 1408590x + 340881",
                ),
                root(
                    "c",
                    "0.2282433142753381738",
                    "37x^10 - 118x^9 + 685x^8 - 1460x^7 + 1490x^6 + 4816x^5 - 4766x^4 + 12596x^3 + 17305x^2 + 2022x - 1503",
                ),
            ],
            scheme_id: "hexagon-stack",
            height: Some(root(
                "height",
                "0.9331427893809348476",
                "2032489x^20 - 8238102x^18 + 22032105x^16 - 37927368x^14 + 43729362x^12 - 36034308x^10 + 20217114x^8 - 5697864x^6 + 312741x^4 - 144342x^2 - 19683",
            )),
            radius: Some(root(
                "radius",
                "0.3595059590971591483",
                "2032489x^20 - 12086788x^18 + 39351192x^16 - 85656480x^14 + 129958848x^12 - 137851392x^10 + 99597312x^8 - 47652864x^6 + 15433728x^4 - 3407872x^2 + 262144",
            )),
            digits: 19,
            ..Row::new(38, Polynomial, 21.0698583869, Some(21.069858))
        },
        42 => Row {
            status: Status::LocalMinimum,
            parameters: PARAMS_42.iter().enumerate().map(|(i, s)| dec(&format!("p{}", i + 1), s)).collect(),
            scheme_id: "triangle-stack-14",
            digits: 17,
            notes: &[
                "the source prints no coordinates; parameters are the best of a multi-start search under the fourteen-triangle scheme",
                "this configuration covers at about 20.0481 degrees, below both the recorded 20.2572026800 and the reference 20.153842; no local minimum at the recorded value was found",
            ],
            ..Row::new(42, Numeric, 20.2572026800, Some(20.153842))
        },
        _ => return None,
    };
    Some(row.build())
}
