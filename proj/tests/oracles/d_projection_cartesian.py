import itertools
def mono(m,n): return [c for c in itertools.combinations_with_replacement(range(n+1),m+1)]
def comp(g,f): return tuple(g[i] for i in f)
def inj(f): return all(f[i]<f[i+1] for i in range(len(f)-1))
def surj(f,n): return set(f)==set(range(n+1))
for N in range(0,4):
    mors=[(m,n,f) for m in range(N+1) for n in range(N+1) for f in mono(m,n)]
    minus=[x for x in mors if surj(x[2],x[1])]
    plus=[x for x in mors if inj(x[2])]
    def hom(s,t):
        (x,y,sf),(z,w,tf)=s,t
        return [f for f in mono(y,w) if any(p[0]==x and p[1]==z and comp(tf,p[2])==comp(f,sf) for p in plus)]
    H={(s,t):hom(s,t) for s in minus for t in minus}
    bad=0
    for t in minus:
        w=t[1]
        for y in range(N+1):
            for g in mono(y,w):
                ok=False
                for s in minus:
                    if s[1]!=y or g not in H[(s,t)]: continue
                    cart=True
                    for r in minus:
                        for h in mono(r[1],y):
                            if comp(g,h) in H[(r,t)] and h not in H[(r,s)]: cart=False;break
                        if not cart: break
                    if cart: ok=True;break
                if not ok: bad+=1
    print(N,"missing cartesian lifts",bad)
