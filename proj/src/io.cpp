// io.cpp

#include "hwlab/io.hpp"

#include <charconv>
#include <cstdint>
#include <cstring>
#include <fstream>

namespace hwlab {

namespace {
void put_u32(std::ofstream& os, std::uint32_t v) { os.write(reinterpret_cast<const char*>(&v), 4); }
void put_f64(std::ofstream& os, double v) { os.write(reinterpret_cast<const char*>(&v), 8); }
std::uint32_t get_u32(std::ifstream& is) {
    std::uint32_t v;
    is.read(reinterpret_cast<char*>(&v), 4);
    return v;
}
double get_f64(std::ifstream& is) {
    double v;
    is.read(reinterpret_cast<char*>(&v), 8);
    return v;
}
}  // namespace

void write_field(const std::filesystem::path& path, const Field& f) {
    if (f.rep() != Rep::physical) throw GridError("write_field: physical representation only");
    std::ofstream os(path, std::ios::binary);
    if (!os) throw GridError("write_field: cannot open " + path.string());
    os.write("HWF1", 4);
    put_u32(os, static_cast<std::uint32_t>(f.grid().nx()));
    put_u32(os, static_cast<std::uint32_t>(f.grid().ny()));
    put_f64(os, f.grid().lx());
    put_f64(os, f.grid().ly());
    os.write(reinterpret_cast<const char*>(f.data()), sizeof(cd) * f.size());
}

Field read_field(const std::filesystem::path& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw GridError("read_field: cannot open " + path.string());
    char magic[4];
    is.read(magic, 4);
    if (std::memcmp(magic, "HWF1", 4) != 0) throw GridError("read_field: bad magic");
    std::uint32_t nx = get_u32(is), ny = get_u32(is);
    double lx = get_f64(is), ly = get_f64(is);
    auto g = make_grid(static_cast<int>(nx), static_cast<int>(ny), lx, ly);
    Field f(g, Rep::physical);
    is.read(reinterpret_cast<char*>(f.data()), sizeof(cd) * f.size());
    if (!is) throw GridError("read_field: truncated file");
    return f;
}

std::string fmt_double(double v) {
    char buf[40];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

CsvWriter::CsvWriter(const std::filesystem::path& path, const std::vector<std::string>& header)
    : path_(path), ncols_(header.size()) {
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (i) buf_ += ',';
        buf_ += header[i];
    }
    buf_ += '\n';
}

void CsvWriter::row(const std::vector<double>& values) {
    if (values.size() != ncols_) throw GridError("CsvWriter: column count mismatch");
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) buf_ += ',';
        buf_ += fmt_double(values[i]);
    }
    buf_ += '\n';
}

void CsvWriter::row_mixed(const std::vector<std::string>& cells) {
    if (cells.size() != ncols_) throw GridError("CsvWriter: column count mismatch");
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) buf_ += ',';
        buf_ += cells[i];
    }
    buf_ += '\n';
}

CsvWriter::~CsvWriter() {
    std::ofstream os(path_, std::ios::binary);
    os.write(buf_.data(), static_cast<std::streamsize>(buf_.size()));
}

}  // namespace hwlab
