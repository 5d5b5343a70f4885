#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <algorithm>
#include <fstream>
#include <sstream>
#include <thread>

#include "dynwg/json_io.hpp"
#include "dynwg/rep.hpp"

namespace dynwg {

namespace fs = std::filesystem;

namespace {

constexpr const char* kLockName = ".lock";

// Exclusive advisory lock on the cache directory for the writer.
class DirLock {
 public:
  explicit DirLock(const fs::path& dir) {
    const fs::path p = dir / kLockName;
    fd_ = ::open(p.c_str(), O_RDWR | O_CREAT, 0644);
    if (fd_ < 0) throw Error("cannot open lock file " + p.string());
    if (::flock(fd_, LOCK_EX) != 0) {
      ::close(fd_);
      throw Error("cannot lock " + p.string());
    }
  }
  ~DirLock() {
    ::flock(fd_, LOCK_UN);
    ::close(fd_);
  }
  DirLock(const DirLock&) = delete;
  DirLock& operator=(const DirLock&) = delete;

 private:
  int fd_ = -1;
};

std::shared_ptr<const Irrep> load_file(const fs::path& file, const LieType& t, const Weight& hw) {
  std::ifstream in(file);
  if (!in) return nullptr;
  try {
    json j = json::parse(in);
    auto v = std::make_shared<const Irrep>(irrep_from_json(j));
    if (!(v->type() == t) || v->highest_weight() != hw) return nullptr;
    return v;
  } catch (const std::exception&) {
    return nullptr;  // unreadable or stale entry: rebuild and overwrite
  }
}

void store_file(const fs::path& dir, const fs::path& file, const Irrep& v) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw Error("cannot create cache directory " + dir.string() + ": " + ec.message());
  DirLock lock(dir);
  std::ostringstream tid;
  tid << std::this_thread::get_id();
  const fs::path tmp = file.string() + ".tmp." + std::to_string(::getpid()) + "." + tid.str();
  {
    std::ofstream out(tmp);
    if (!out) throw Error("cannot write cache file " + tmp.string());
    out << irrep_to_json(v).dump() << "\n";
    if (!out) throw Error("cannot write cache file " + tmp.string());
  }
  fs::rename(tmp, file, ec);
  if (ec) throw Error("cannot move cache file into place at " + file.string() + ": " + ec.message());
}

}  // namespace

std::string IrrepCache::key(const LieType& t, const Weight& hw) {
  std::string k = t.name() + "_";
  for (int i = 0; i < hw.rank(); ++i) k += (i ? "-" : "") + std::to_string(hw[i]);
  return k;
}

std::shared_ptr<const Irrep> IrrepCache::get(const LieType& t, const Weight& hw, long dim_cap) {
  const std::string k = key(t, hw);
  {
    std::lock_guard<std::mutex> g(mu_);
    auto it = memory_.find(k);
    if (it != memory_.end()) {
      if (it->second->dim() > dim_cap)
        throw DimensionCapExceeded("V(" + hw.str() + ") of " + t.name() + " has dimension " +
                                   std::to_string(it->second->dim()) + " > cap " + std::to_string(dim_cap));
      return it->second;
    }
  }
  const long predicted = weyl_dimension(t, hw);
  if (predicted > dim_cap)
    throw DimensionCapExceeded("V(" + hw.str() + ") of " + t.name() + " has dimension " + std::to_string(predicted) +
                               " > cap " + std::to_string(dim_cap));
  std::shared_ptr<const Irrep> v;
  if (dir_) v = load_file(*dir_ / (k + ".json"), t, hw);
  if (!v) {
    v = std::make_shared<const Irrep>(build_irrep(t, hw, dim_cap));
    if (dir_) store_file(*dir_, *dir_ / (k + ".json"), *v);
  }
  std::lock_guard<std::mutex> g(mu_);
  return memory_.emplace(k, v).first->second;
}

std::vector<std::string> IrrepCache::list() const {
  std::vector<std::string> out;
  if (!dir_ || !fs::exists(*dir_)) return out;
  for (const auto& e : fs::directory_iterator(*dir_))
    if (e.is_regular_file() && e.path().extension() == ".json") out.push_back(e.path().stem().string());
  std::sort(out.begin(), out.end());
  return out;
}

int IrrepCache::clear() {
  {
    std::lock_guard<std::mutex> g(mu_);
    memory_.clear();
  }
  if (!dir_ || !fs::exists(*dir_)) return 0;
  DirLock lock(*dir_);
  int n = 0;
  for (const auto& e : fs::directory_iterator(*dir_)) {
    const std::string name = e.path().filename().string();
    if (e.is_regular_file() && (e.path().extension() == ".json" || name.find(".json.tmp.") != std::string::npos)) {
      fs::remove(e.path());
      if (e.path().extension() == ".json") ++n;
    }
  }
  return n;
}

}  // namespace dynwg
