#include "cubic_mw/point_list_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <system_error>
#include <unistd.h>

#include "cubic_mw/errors.hpp"

namespace cubic_mw {

namespace {

std::string next_line(std::istream& in, const char* what) {
  std::string line;
  if (!std::getline(in, line)) throw IoError(std::string("point list: missing ") + what);
  return line;
}

}  // namespace

void write_point_list(std::ostream& out, const PointList& list) {
  const auto& k = list.coefficients;
  out << "# surface " << list.label << ' ' << k[0] << ' ' << k[1] << ' ' << k[2] << ' ' << k[3]
      << '\n';
  out << (list.bound.kind == HeightKind::Max ? "# hmax_bound " : "# hsum_bound ")
      << list.bound.value << '\n';
  for (const auto& p : list.points) {
    out << p.c[0] << ' ' << p.c[1] << ' ' << p.c[2] << ' ' << p.c[3] << '\n';
  }
  if (!out) throw IoError("point list: write failed");
}

PointList read_point_list(std::istream& in) {
  PointList list;
  {
    std::istringstream header(next_line(in, "surface header"));
    std::string hash, tag;
    if (!(header >> hash >> tag >> list.label) || hash != "#" || tag != "surface") {
      throw IoError("point list: malformed surface header");
    }
    for (auto& k : list.coefficients) {
      if (!(header >> k)) throw IoError("point list: malformed surface coefficients");
    }
  }
  {
    std::istringstream header(next_line(in, "bound header"));
    std::string hash, tag;
    if (!(header >> hash >> tag >> list.bound.value) || hash != "#") {
      throw IoError("point list: malformed bound header");
    }
    if (tag == "hmax_bound") {
      list.bound.kind = HeightKind::Max;
    } else if (tag == "hsum_bound") {
      list.bound.kind = HeightKind::Sum;
    } else {
      throw IoError("point list: unknown bound kind " + tag);
    }
  }
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream fields(line);
    SmallPoint p;
    if (!(fields >> p.c[0] >> p.c[1] >> p.c[2] >> p.c[3])) {
      throw IoError("point list: malformed point line `" + line + "`");
    }
    list.points.push_back(p);
  }
  return list;
}

void save_point_list(const std::filesystem::path& path, const PointList& list) {
  std::error_code ec;
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path(), ec);
  auto tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp);
    if (!out) throw IoError("cannot write " + tmp.string());
    write_point_list(out, list);
  }
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw IoError("cannot rename " + tmp.string() + ": " + ec.message());
}

PointList load_point_list(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  return read_point_list(in);
}

}  // namespace cubic_mw
