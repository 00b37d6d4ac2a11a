#include "fblab/field_io.hpp"

#include <bit>
#include <cstring>
#include <fstream>

#include <json.hpp>

#include "fblab/errors.hpp"

static_assert(std::endian::native == std::endian::little,
              "field files are little-endian; big-endian hosts are unsupported");

namespace fblab {

void write_field(const VectorField& u, const std::string& base_path) {
  nlohmann::ordered_json header;
  header["d"] = u.spec.d;
  header["n"] = u.spec.n;
  header["k"] = u.k;
  header["extent"] = u.spec.extent;
  header["dtype"] = "f64le";
  header["order"] = "node-major, component-minor, axis-0 fastest";

  std::ofstream jf(base_path + ".json", std::ios::binary);
  if (!jf) throw IoError("write_field: cannot open " + base_path + ".json");
  jf << header.dump(2) << "\n";

  std::ofstream bf(base_path + ".bin", std::ios::binary);
  if (!bf) throw IoError("write_field: cannot open " + base_path + ".bin");
  bf.write(reinterpret_cast<const char*>(u.values.data()),
           static_cast<std::streamsize>(u.values.size() * sizeof(double)));
  if (!bf) throw IoError("write_field: short write to " + base_path + ".bin");
}

VectorField read_field(const std::string& base_path) {
  std::ifstream jf(base_path + ".json", std::ios::binary);
  if (!jf) throw IoError("read_field: cannot open " + base_path + ".json");
  nlohmann::json header;
  try {
    jf >> header;
  } catch (const nlohmann::json::exception& e) {
    throw IoError("read_field: bad header: " + std::string(e.what()));
  }
  if (header.value("dtype", "") != std::string("f64le"))
    throw IoError("read_field: unsupported dtype");

  GridSpec spec(header.at("d").get<int>(), header.at("n").get<int>(),
                header.at("extent").get<double>());
  VectorField u(spec, header.at("k").get<int>());

  std::ifstream bf(base_path + ".bin", std::ios::binary);
  if (!bf) throw IoError("read_field: cannot open " + base_path + ".bin");
  bf.read(reinterpret_cast<char*>(u.values.data()),
          static_cast<std::streamsize>(u.values.size() * sizeof(double)));
  if (bf.gcount() != static_cast<std::streamsize>(u.values.size() * sizeof(double)))
    throw IoError("read_field: binary payload size mismatch");
  return u;
}

} // namespace fblab
