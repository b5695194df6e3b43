import itertools
def comps(k):
    if k==0: yield (); return
    for f in range(1,k+1):
        for r in comps(k-f): yield (f,)+r
def mono(m,n):
    return [c for c in itertools.combinations_with_replacement(range(n+1),m+1)]
for N in range(0,7):
    objs=[c for s in range(1,N+2) for c in comps(s)]
    hom={}
    for a in objs:
        for b in objs:
            L=[f for f in mono(len(a)-1,len(b)-1) if all(b[j]>=sum(a[i] for i in range(len(a)) if f[i]==j) for j in range(len(b)))]
            hom[(a,b)]=L
    nm=sum(len(v) for v in hom.values())
    pairs=sum(len(hom[(a,b)])*len(hom[(b,c)]) for a in objs for b in objs for c in objs)
    marked=sum(1 for (a,b),L in hom.items() if a!=b and len(a)==len(b) for f in L if list(f)==list(range(len(a))))
    print(N,len(objs),nm,pairs,marked)
