#include "engine.hpp"

#include <arpa/inet.h>
#include <netinet/in.h>
#include <netinet/tcp.h>
#include <sys/socket.h>
#include <unistd.h>

#include <atomic>
#include <cstring>
#include <thread>

// Real-socket channel for integration smoke tests and the `serve` command.
// Frames: magic 'PYXW', version, type, flags, session id, artifact hash,
// payload length, payload. Semantics identical to the simulator; no delay
// injection.

namespace pyx {

namespace {

constexpr uint32_t kMagic = 0x50595857; // "PYXW"
constexpr uint16_t kVersion = 1;

enum class FrameType : uint8_t {
  Hello = 1,
  HelloAck = 2,
  Start = 3,    // begin session: entry name + args (plus initial state)
  Transfer = 4, // control transfer
  Result = 5,   // session finished; payload carries final transfer
  Bye = 6,
  Refused = 7,
};

struct Frame {
  FrameType type;
  uint32_t session = 0;
  uint64_t hash = 0;
  std::string payload;
};

void send_all(int fd, const void *data, size_t n) {
  const char *p = static_cast<const char *>(data);
  while (n) {
    ssize_t k = ::send(fd, p, n, 0);
    if (k <= 0)
      throw Diag("session", "peer disconnected while sending");
    p += k;
    n -= static_cast<size_t>(k);
  }
}

void recv_all(int fd, void *data, size_t n) {
  char *p = static_cast<char *>(data);
  while (n) {
    ssize_t k = ::recv(fd, p, n, 0);
    if (k <= 0)
      throw Diag("session", "peer disconnected while receiving");
    p += k;
    n -= static_cast<size_t>(k);
  }
}

void write_frame(int fd, const Frame &f) {
  WireWriter w;
  w.u32(kMagic);
  w.u16(kVersion);
  w.u8(static_cast<uint8_t>(f.type));
  w.u8(0);
  w.u32(f.session);
  w.u64(f.hash);
  w.u32(static_cast<uint32_t>(f.payload.size()));
  std::string head = w.take();
  send_all(fd, head.data(), head.size());
  if (!f.payload.empty())
    send_all(fd, f.payload.data(), f.payload.size());
}

Frame read_frame(int fd) {
  char head[24];
  recv_all(fd, head, sizeof(head));
  WireReader r(std::string_view(head, sizeof(head)));
  if (r.u32() != kMagic)
    throw Diag("session", "bad frame magic");
  if (r.u16() != kVersion)
    throw Diag("session", "wire version mismatch");
  Frame f;
  f.type = static_cast<FrameType>(r.u8());
  r.u8();
  f.session = r.u32();
  f.hash = r.u64();
  uint32_t len = r.u32();
  f.payload.resize(len);
  if (len)
    recv_all(fd, f.payload.data(), len);
  return f;
}

struct FdCloser {
  int fd = -1;
  ~FdCloser() {
    if (fd >= 0)
      ::close(fd);
  }
};

} // namespace

// ---- DB-side host ----

struct TcpDbHost::Impl {
  TcpServerConfig cfg;
  int listen_fd = -1;
  uint16_t port = 0;
  std::thread thread;
  std::atomic<bool> done{false};
  MiniDb db;
  std::string final_db_dump;
  std::string error;

  explicit Impl(TcpServerConfig c) : cfg(std::move(c)), db(cfg.db_init) {
    listen_fd = ::socket(AF_INET, SOCK_STREAM, 0);
    if (listen_fd < 0)
      throw Diag("session", "socket() failed");
    int one = 1;
    ::setsockopt(listen_fd, SOL_SOCKET, SO_REUSEADDR, &one, sizeof(one));
    sockaddr_in addr{};
    addr.sin_family = AF_INET;
    addr.sin_port = htons(cfg.port);
    if (::inet_pton(AF_INET, cfg.listen_host.c_str(), &addr.sin_addr) != 1)
      throw Diag("session", "bad listen address " + cfg.listen_host);
    if (::bind(listen_fd, reinterpret_cast<sockaddr *>(&addr), sizeof(addr)) != 0)
      throw Diag("session", "bind failed on " + cfg.listen_host);
    socklen_t len = sizeof(addr);
    ::getsockname(listen_fd, reinterpret_cast<sockaddr *>(&addr), &len);
    port = ntohs(addr.sin_port);
    if (::listen(listen_fd, 1) != 0)
      throw Diag("session", "listen failed");
    thread = std::thread([this] { serve(); });
  }

  ~Impl() {
    if (listen_fd >= 0)
      ::close(listen_fd);
    if (thread.joinable())
      thread.join();
  }

  void serve() {
    try {
      FdCloser conn{::accept(listen_fd, nullptr, nullptr)};
      if (conn.fd < 0)
        throw Diag("session", "accept failed");
      int one = 1;
      ::setsockopt(conn.fd, IPPROTO_TCP, TCP_NODELAY, &one, sizeof(one));

      Frame hello = read_frame(conn.fd);
      if (hello.type != FrameType::Hello)
        throw Diag("session", "expected HELLO");
      if (hello.hash != cfg.bundle->hash) {
        Frame refuse;
        refuse.type = FrameType::Refused;
        refuse.hash = cfg.bundle->hash;
        refuse.payload = "artifact hash mismatch between hosts";
        write_frame(conn.fd, refuse);
        throw Diag("session", "artifact hash mismatch between hosts");
      }
      Frame ack;
      ack.type = FrameType::HelloAck;
      ack.hash = cfg.bundle->hash;
      write_frame(conn.fd, ack);

      std::map<uint32_t, std::unique_ptr<rt::HostEngine>> sessions;
      while (true) {
        Frame f = read_frame(conn.fd);
        if (f.type == FrameType::Bye)
          break;
        if (f.type != FrameType::Transfer)
          throw Diag("session", "unexpected frame type");
        auto &engine = sessions[f.session];
        if (!engine) {
          engine = std::make_unique<rt::HostEngine>(Host::Db, *cfg.bundle);
          engine->set_db(&db);
        }
        uint32_t cur = engine->apply_transfer(f.payload);
        while (true) {
          if (cur == rt::kHaltBlock || cur >= cfg.bundle->prog.blocks.size())
            break;
          const ExecutionBlock &blk = cfg.bundle->prog.blocks[cur];
          if (blk.host != Host::Db)
            break;
          cur = engine->exec_block(blk);
        }
        Frame reply;
        reply.type = FrameType::Transfer;
        reply.session = f.session;
        reply.hash = cfg.bundle->hash;
        reply.payload = engine->build_transfer(cur);
        write_frame(conn.fd, reply);
        if (cur == rt::kHaltBlock)
          sessions.erase(f.session);
      }
      final_db_dump = db.dump();
    } catch (const std::exception &e) {
      error = e.what();
      final_db_dump = db.dump();
    }
    done = true;
  }
};

TcpDbHost::TcpDbHost(TcpServerConfig cfg) : impl_(std::make_unique<Impl>(std::move(cfg))) {}
TcpDbHost::~TcpDbHost() = default;
uint16_t TcpDbHost::port() const { return impl_->port; }
void TcpDbHost::wait() {
  if (impl_->thread.joinable())
    impl_->thread.join();
  if (!impl_->error.empty())
    throw Diag("session", impl_->error);
}
std::string TcpDbHost::final_db() { return impl_->final_db_dump; }

// ---- App-side client ----

struct TcpAppClient::Impl {
  const Bundle &bundle;
  int fd = -1;
  std::vector<std::string> console;
  uint32_t session_seq = 0;
  uint64_t next_object = 1;

  Impl(const std::string &host, uint16_t port, const Bundle &b) : bundle(b) {
    fd = ::socket(AF_INET, SOCK_STREAM, 0);
    if (fd < 0)
      throw Diag("session", "socket() failed");
    sockaddr_in addr{};
    addr.sin_family = AF_INET;
    addr.sin_port = htons(port);
    if (::inet_pton(AF_INET, host.c_str(), &addr.sin_addr) != 1)
      throw Diag("session", "bad host address " + host);
    if (::connect(fd, reinterpret_cast<sockaddr *>(&addr), sizeof(addr)) != 0)
      throw Diag("session", "connect failed to " + host + ":" + std::to_string(port));
    int one = 1;
    ::setsockopt(fd, IPPROTO_TCP, TCP_NODELAY, &one, sizeof(one));

    Frame hello;
    hello.type = FrameType::Hello;
    hello.hash = bundle.hash;
    write_frame(fd, hello);
    Frame ack = read_frame(fd);
    if (ack.type == FrameType::Refused)
      throw Diag("session", "session refused: " + ack.payload);
    if (ack.type != FrameType::HelloAck)
      throw Diag("session", "bad HELLO response");
  }

  ~Impl() {
    if (fd >= 0)
      ::close(fd);
  }

  Value call(const std::string &entry, const std::vector<Value> &args,
             SessionStats *stats) {
    const EntryWrapper *wrapper = nullptr;
    for (const auto &w : bundle.prog.wrappers)
      if (w.func == entry)
        wrapper = &w;
    if (!wrapper)
      throw Diag("session", "no entry point '" + entry + "' in the artifact");

    rt::HostEngine app(Host::App, bundle);
    app.set_console(&console);
    app.start_session(*wrapper, args, next_object);
    uint32_t session_id = ++session_seq;
    uint32_t cur = wrapper->entry_block;
    SessionStats local{};

    while (true) {
      if (cur == rt::kHaltBlock)
        break;
      if (cur >= bundle.prog.blocks.size())
        throw Diag("session", "unknown block id " + std::to_string(cur) +
                                  " (artifact version mismatch)");
      const ExecutionBlock &blk = bundle.prog.blocks[cur];
      if (blk.host != Host::App) {
        Frame f;
        f.type = FrameType::Transfer;
        f.session = session_id;
        f.hash = bundle.hash;
        f.payload = app.build_transfer(cur);
        write_frame(fd, f);
        ++local.transfers;
        local.bytes_on_wire += f.payload.size() + 24;
        Frame reply = read_frame(fd);
        if (reply.type != FrameType::Transfer)
          throw Diag("session", "unexpected reply frame");
        ++local.transfers;
        local.bytes_on_wire += reply.payload.size() + 24;
        cur = app.apply_transfer(reply.payload);
        continue;
      }
      cur = app.exec_block(blk);
    }
    // tell the peer the session is over if it never participated? not
    // needed: sessions close when the final transfer names the halt block
    next_object = app.next_object_id();
    if (stats)
      *stats = local;
    return app.result();
  }

  void bye() {
    Frame f;
    f.type = FrameType::Bye;
    f.hash = bundle.hash;
    write_frame(fd, f);
  }
};

TcpAppClient::TcpAppClient(const std::string &host, uint16_t port, const Bundle &bundle)
    : impl_(std::make_unique<Impl>(host, port, bundle)) {}
TcpAppClient::~TcpAppClient() = default;
Value TcpAppClient::call_entry(const std::string &entry, const std::vector<Value> &args,
                               SessionStats *stats) {
  return impl_->call(entry, args, stats);
}
std::vector<std::string> TcpAppClient::prints() const { return impl_->console; }
void TcpAppClient::bye() { impl_->bye(); }

} // namespace pyx
