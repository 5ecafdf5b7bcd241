#include "plastiplate/io.hpp"

#include <cstdint>
#include <cstring>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace plp::io {

namespace {

constexpr char kMagic[4] = {'P', 'L', 'P', '1'};
constexpr size_t kHeaderSize = 64;

struct RawHeader {
    char magic[4];
    uint32_t version;
    uint32_t ny, nx, nl, ncomp;
    int32_t step;
    double time;
    double Lx, Ly;
};
static_assert(sizeof(RawHeader) <= kHeaderSize);

}  // namespace

Snapshot make_snapshot(const PlateGrid& g, const PlateState& st) {
    Snapshot s;
    s.nx = g.nx;
    s.ny = g.ny;
    s.nl = g.nlayers();
    s.components = {"sigma11", "sigma22", "sigma12", "e11", "e22", "e12",
                    "p11",     "p22",     "p12",     "u1",  "u2",  "u3"};
    s.ncomp = static_cast<int>(s.components.size());
    s.step = st.step;
    s.time = st.time;
    s.Lx = g.Lx;
    s.Ly = g.Ly;
    s.data.resize(static_cast<size_t>(s.nx) * s.ny * s.nl * s.ncomp);
    size_t q = 0;
    for (int j = 0; j < s.ny; ++j)
        for (int i = 0; i < s.nx; ++i)
            for (int l = 0; l < s.nl; ++l) {
                const Sym2& sg = st.sigma.at(i, j, l);
                const Sym2& e = st.strain.at(i, j, l);
                const Sym2& p = st.plastic.at(i, j, l);
                const double vals[12] = {sg.a11, sg.a22, sg.a12, e.a11, e.a22, e.a12,
                                         p.a11,  p.a22,  p.a12,  st.u.ubar.x.at(i, j),
                                         st.u.ubar.y.at(i, j), st.u.u3.at(i, j)};
                for (double v : vals) s.data[q++] = v;
            }
    return s;
}

void write_snapshot(const std::filesystem::path& base, const Snapshot& s) {
    const auto plp_path = base.string() + ".plp";
    std::ofstream out(plp_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + plp_path + " for writing");

    char header[kHeaderSize] = {};
    RawHeader h{};
    std::memcpy(h.magic, kMagic, 4);
    h.version = 1;
    h.ny = static_cast<uint32_t>(s.ny);
    h.nx = static_cast<uint32_t>(s.nx);
    h.nl = static_cast<uint32_t>(s.nl);
    h.ncomp = static_cast<uint32_t>(s.ncomp);
    h.step = s.step;
    h.time = s.time;
    h.Lx = s.Lx;
    h.Ly = s.Ly;
    std::memcpy(header, &h, sizeof(h));
    out.write(header, kHeaderSize);
    out.write(reinterpret_cast<const char*>(s.data.data()),
              static_cast<std::streamsize>(s.data.size() * sizeof(double)));
    if (!out) throw std::runtime_error("write failed on " + plp_path);

    std::ofstream meta(base.string() + ".meta");
    meta << "format: plp1\n";
    meta << "step: " << s.step << "\n";
    meta << "time: " << s.time << "\n";
    meta << "nx: " << s.nx << "\nny: " << s.ny << "\nlayers: " << s.nl << "\n";
    meta << "Lx: " << s.Lx << "\nLy: " << s.Ly << "\n";
    meta << "order: row-major (y, x, layer, component)\n";
    meta << "components:";
    for (const auto& c : s.components) meta << ' ' << c;
    meta << "\n";
    meta << "note: u1 u2 u3 do not depend on the layer and are repeated per layer\n";
}

Snapshot read_snapshot(const std::filesystem::path& plp_path) {
    std::ifstream in(plp_path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + plp_path.string());
    char header[kHeaderSize];
    in.read(header, kHeaderSize);
    if (!in) throw std::runtime_error("truncated header in " + plp_path.string());
    RawHeader h;
    std::memcpy(&h, header, sizeof(h));
    if (std::memcmp(h.magic, kMagic, 4) != 0)
        throw std::runtime_error(plp_path.string() + " is not a PLP1 snapshot");

    Snapshot s;
    s.nx = static_cast<int>(h.nx);
    s.ny = static_cast<int>(h.ny);
    s.nl = static_cast<int>(h.nl);
    s.ncomp = static_cast<int>(h.ncomp);
    s.step = h.step;
    s.time = h.time;
    s.Lx = h.Lx;
    s.Ly = h.Ly;
    const size_t count = static_cast<size_t>(s.nx) * s.ny * s.nl * s.ncomp;
    s.data.resize(count);
    in.read(reinterpret_cast<char*>(s.data.data()),
            static_cast<std::streamsize>(count * sizeof(double)));
    if (!in) throw std::runtime_error("truncated payload in " + plp_path.string());

    auto meta_path = plp_path;
    meta_path.replace_extension(".meta");
    std::ifstream meta(meta_path);
    if (meta) {
        std::string line;
        while (std::getline(meta, line)) {
            if (line.rfind("components:", 0) == 0) {
                std::istringstream ss(line.substr(11));
                std::string tok;
                while (ss >> tok) s.components.push_back(tok);
            }
        }
    }
    if (s.components.empty())
        for (int c = 0; c < s.ncomp; ++c) s.components.push_back("c" + std::to_string(c));
    return s;
}

void export_csv(const Snapshot& s, std::ostream& os) {
    os << "j,i,layer";
    for (const auto& c : s.components) os << ',' << c;
    os << '\n';
    os.precision(17);
    for (int j = 0; j < s.ny; ++j)
        for (int i = 0; i < s.nx; ++i)
            for (int l = 0; l < s.nl; ++l) {
                os << j << ',' << i << ',' << l;
                for (int c = 0; c < s.ncomp; ++c) os << ',' << s.at(i, j, l, c);
                os << '\n';
            }
}

}  // namespace plp::io
