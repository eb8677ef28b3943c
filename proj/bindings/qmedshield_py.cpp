// Python bindings: numpy uint8 arrays in, numpy uint8 arrays out.
#include <pybind11/numpy.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstring>
#include <optional>

#include "qmedshield/analysis.hpp"
#include "qmedshield/chaos.hpp"
#include "qmedshield/cipher.hpp"

namespace py = pybind11;
namespace qms = qmedshield;

namespace {

qms::GrayImage image_from_array(const py::array_t<std::uint8_t, py::array::c_style |
                                                                    py::array::forcecast>& arr) {
    if (arr.ndim() != 2) throw py::value_error("expected a 2-D uint8 array (height, width)");
    const int h = static_cast<int>(arr.shape(0));
    const int w = static_cast<int>(arr.shape(1));
    if (h < 1 || w < 1) throw py::value_error("image must be at least 1x1");
    qms::GrayImage img(w, h);
    std::memcpy(img.pixels.data(), arr.data(), img.pixels.size());
    return img;
}

py::array_t<std::uint8_t> array_from_image(const qms::GrayImage& img) {
    py::array_t<std::uint8_t> arr({img.height, img.width});
    std::memcpy(arr.mutable_data(), img.pixels.data(), img.pixels.size());
    return arr;
}

qms::cipher::KeySet keyset_from_seed(const std::optional<py::bytes>& seed) {
    if (!seed) return qms::cipher::keygen();
    const std::string raw = *seed;
    if (raw.size() != 32) throw py::value_error("seed must be exactly 32 bytes");
    std::array<std::uint8_t, 32> bytes{};
    std::memcpy(bytes.data(), raw.data(), 32);
    return qms::cipher::keygen(bytes);
}

qms::analysis::Direction direction_from_string(const std::string& name) {
    if (name == "horizontal") return qms::analysis::Direction::Horizontal;
    if (name == "vertical") return qms::analysis::Direction::Vertical;
    if (name == "diagonal") return qms::analysis::Direction::Diagonal;
    throw py::value_error("direction must be horizontal, vertical or diagonal");
}

using ImageArg = py::array_t<std::uint8_t, py::array::c_style | py::array::forcecast>;

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Chaos-based grayscale image encryption (bit-plane scrambling, quantum-logistic "
              "XOR diffusion, DNA-coded confusion) with the security-analysis battery.";

    py::register_exception<qms::KeyError>(m, "KeyFileError", PyExc_ValueError);
    py::register_exception<qms::DimensionError>(m, "DimensionError", PyExc_ValueError);
    py::register_exception<qms::DivergenceError>(m, "DivergenceError", PyExc_ArithmeticError);

    py::class_<qms::cipher::KeySet>(m, "KeySet")
        .def_static("generate", [](const std::optional<py::bytes>& seed) {
            return keyset_from_seed(seed);
        }, py::arg("seed") = std::nullopt,
           "Generate a key set; a 32-byte seed makes it reproducible.")
        .def_static("from_text", [](const std::string& text) {
            return qms::cipher::parse_key(text);
        }, py::arg("text"))
        .def("to_text", [](const qms::cipher::KeySet& k) { return qms::cipher::serialize_key(k); })
        .def("fingerprint",
             [](const qms::cipher::KeySet& k) { return qms::cipher::key_fingerprint(k); })
        .def(py::self == py::self)
        .def("__repr__", [](const qms::cipher::KeySet& k) {
            return "<qmedshield.KeySet fingerprint=" + qms::cipher::key_fingerprint(k) + ">";
        });

    m.def("encrypt", [](const ImageArg& img, const qms::cipher::KeySet& key) {
        return array_from_image(qms::cipher::encrypt(image_from_array(img), key));
    }, py::arg("image"), py::arg("key"));

    m.def("decrypt", [](const ImageArg& img, const qms::cipher::KeySet& key) {
        return array_from_image(qms::cipher::decrypt(image_from_array(img), key));
    }, py::arg("image"), py::arg("key"));

    m.def("entropy", [](const ImageArg& img) {
        return qms::analysis::entropy(image_from_array(img));
    }, py::arg("image"), "Shannon entropy of the 256-bin histogram, in bits.");

    m.def("chi_square", [](const ImageArg& img) {
        const auto r = qms::analysis::chi_square(image_from_array(img));
        return py::make_tuple(r.statistic, r.pass);
    }, py::arg("image"), "Histogram uniformity statistic and its pass flag (critical value 293).");

    m.def("npcr", [](const ImageArg& a, const ImageArg& b) {
        return qms::analysis::npcr(image_from_array(a), image_from_array(b));
    }, py::arg("a"), py::arg("b"), "Percentage of differing pixel positions.");

    m.def("uaci", [](const ImageArg& a, const ImageArg& b) {
        return qms::analysis::uaci(image_from_array(a), image_from_array(b));
    }, py::arg("a"), py::arg("b"), "Mean |a-b| / 255 as a percentage.");

    m.def("correlation", [](const ImageArg& img, const std::string& direction) {
        return qms::analysis::correlation(image_from_array(img), direction_from_string(direction));
    }, py::arg("image"), py::arg("direction"),
       "Adjacent-pixel correlation along horizontal/vertical/diagonal.");

    m.def("error_metrics", [](const ImageArg& plain, const ImageArg& cipher) {
        const auto e = qms::analysis::error_metrics(image_from_array(plain),
                                                    image_from_array(cipher));
        return py::make_tuple(e.mae, e.rmse, e.psnr);
    }, py::arg("plain"), py::arg("cipher"), "(MAE, RMSE, PSNR dB); PSNR is inf for equal images.");

    m.def("key_sensitivity", [](const ImageArg& img, const qms::cipher::KeySet& key,
                                double perturbation) {
        return qms::analysis::key_sensitivity_test(image_from_array(img), key, perturbation);
    }, py::arg("image"), py::arg("key"), py::arg("perturbation"),
       "NPCR between decryptions with the correct key and a y0-perturbed key.");

    m.def("analyze_json", [](const ImageArg& plain, const ImageArg& cipher,
                             const qms::cipher::KeySet& key) {
        return qms::analysis::report_to_json(
            qms::analysis::analyze(image_from_array(plain), image_from_array(cipher), key));
    }, py::arg("plain"), py::arg("cipher"), py::arg("key"),
       "Full security-analysis report as a JSON string.");

    m.def("henon_sequence", [](double x0, double y0, double alpha, double beta, long burn_in,
                               std::size_t n) {
        const auto seq = qms::chaos::henon_sequence({x0, y0, alpha, beta, burn_in}, n);
        py::array_t<double> arr({seq.size(), std::size_t(2)});
        auto view = arr.mutable_unchecked<2>();
        for (std::size_t i = 0; i < seq.size(); ++i) {
            view(i, 0) = seq[i].first;
            view(i, 1) = seq[i].second;
        }
        return arr;
    }, py::arg("x0"), py::arg("y0"), py::arg("alpha") = 1.4, py::arg("beta") = 0.3,
       py::arg("burn_in") = 1000, py::arg("n") = 1000);

    m.def("hybrid_sequence", [](double x0, double r, long burn_in, std::size_t n) {
        const auto seq = qms::chaos::hybrid_sequence({x0, r, burn_in}, n);
        return py::array_t<double>(py::ssize_t(seq.size()), seq.data());
    }, py::arg("x0"), py::arg("r"), py::arg("burn_in") = 1000, py::arg("n") = 1000);

    m.def("quantum_logistic_sequence", [](double x0, double y0, double z0, double eta,
                                          double gamma, long burn_in, std::size_t n) {
        const auto seq =
            qms::chaos::quantum_logistic_sequence({x0, y0, z0, eta, gamma, burn_in}, n);
        py::array_t<double> arr({seq.size(), std::size_t(3)});
        auto view = arr.mutable_unchecked<2>();
        for (std::size_t i = 0; i < seq.size(); ++i) {
            view(i, 0) = seq[i].x;
            view(i, 1) = seq[i].y;
            view(i, 2) = seq[i].z;
        }
        return arr;
    }, py::arg("x0") = 0.5, py::arg("y0") = 0.05, py::arg("z0") = 0.02, py::arg("eta") = 4.0,
       py::arg("gamma") = 6.0, py::arg("burn_in") = 1000, py::arg("n") = 1000);

    m.attr("__version__") = "1.0.0";
}
